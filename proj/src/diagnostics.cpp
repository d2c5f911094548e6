#include "h1flow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "h1flow/flow.hpp"

namespace h1flow {

namespace {

DiagnosticsRecord geometric_record(const PolyCurve& curve, double t) {
  DiagnosticsRecord r;
  const ArcData arc = arc_data(curve);
  r.t = t;
  r.length = arc.length;
  r.area = signed_area(curve);
  const double l2 = arc.length * arc.length;
  r.iso_ratio = l2 / (4.0 * std::numbers::pi * std::abs(r.area));
  r.deficit = l2 - 4.0 * std::numbers::pi * r.area;
  r.linf = linf_norm(curve.vertices());
  double sum = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) sum += norm_sq(curve[i]) * arc.ds[i];
  r.l2ds = std::sqrt(sum);
  r.xu_l2 = xu_l2(curve);
  r.min_edge = *std::min_element(arc.edge.begin(), arc.edge.end());
  r.chord_arc_min = chord_arc_min(curve).value;
  const FrameData frame = frame_data(curve);
  double kmax = 0.0;
  for (double k : frame.curvature) kmax = std::max(kmax, std::abs(k));
  r.max_abs_k = kmax;
  r.rescaled_max_k = std::exp(-t) * kmax;
  r.embeddedness_ok = embeddedness_condition(r.chord_arc_min, r.length, r.linf).ok;
  return r;
}

}  // namespace

DiagnosticsRecord record(const PolyCurve& curve, double t, const VelocityField& velocity) {
  DiagnosticsRecord r = geometric_record(curve, t);
  r.grad_sq_h1ds = velocity.grad_norm_sq_h1ds;
  return r;
}

DiagnosticsRecord record(const PolyCurve& curve, double t) {
  return record(curve, t, flow_velocity(curve));
}

EmbeddednessCheck embeddedness_condition(double chord_arc, double length, double linf) {
  const double a = length * length * std::sqrt(2.0 + linf * linf) / 4.0;
  EmbeddednessCheck c;
  c.lhs = chord_arc;
  c.rhs = a * std::exp(a);
  c.ok = c.lhs > c.rhs;
  return c;
}

EmbeddednessCheck embeddedness_condition(const PolyCurve& curve) {
  return embeddedness_condition(chord_arc_min(curve).value, total_length(curve),
                                linf_norm(curve.vertices()));
}

bool MonotonicityReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const MonitorVerdict& v) { return v.pass; });
}

const MonitorVerdict& MonotonicityReport::verdict(std::string_view name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return v;
  }
  throw InvalidArgument("unknown monitor " + std::string(name));
}

MonotonicityReport monotonicity_report(const Trajectory& traj, double slack) {
  const auto& recs = traj.records;
  if (recs.size() < 2) throw InvalidArgument("monotonicity report needs at least two records");

  struct Monitor {
    const char* name;
    double DiagnosticsRecord::*field;
  };
  static constexpr Monitor kMonitors[] = {
      {"length", &DiagnosticsRecord::length},
      {"linf", &DiagnosticsRecord::linf},
      {"xu_l2", &DiagnosticsRecord::xu_l2},
      {"l2ds", &DiagnosticsRecord::l2ds},
  };

  MonotonicityReport report;
  for (const auto& m : kMonitors) {
    MonitorVerdict v;
    v.name = m.name;
    v.slack = slack;
    v.worst_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < recs.size(); ++k) {
      const double inc = recs[k].*m.field - recs[k - 1].*m.field;
      if (inc > v.worst_violation) {
        v.worst_violation = inc;
        v.worst_step = k;
      }
    }
    v.worst_violation = std::max(v.worst_violation, 0.0);
    v.pass = v.worst_violation <= slack;
    report.verdicts.push_back(std::move(v));
  }

  const double d0 = recs.front().deficit;
  double dsup = -std::numeric_limits<double>::infinity();
  double ksup = 0.0;
  for (const auto& r : recs) {
    dsup = std::max(dsup, std::exp(2.0 * r.t) * r.deficit);
    ksup = std::max(ksup, r.rescaled_max_k);
  }
  report.profile_deficit_ratio_sup =
      d0 > 0.0 ? dsup / d0 : std::numeric_limits<double>::quiet_NaN();
  report.rescaled_max_k_sup = ksup;
  return report;
}

}  // namespace h1flow
