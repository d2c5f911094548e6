#include "h1flow/flow.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "h1flow/gradient.hpp"
#include "h1flow/greens.hpp"

namespace h1flow {

namespace {

constexpr double kMaxStepCount = 1e8;

PolyCurve axpy(const PolyCurve& curve, double h, const Field& v) {
  std::vector<Vec2> out(curve.vertices().begin(), curve.vertices().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * v[i];
  return PolyCurve(std::move(out));
}

PolyCurve rk4_from(const PolyCurve& curve, double h, const Field& k1) {
  const Field k2 = flow_velocity(axpy(curve, 0.5 * h, k1)).v;
  const Field k3 = flow_velocity(axpy(curve, 0.5 * h, k2)).v;
  const Field k4 = flow_velocity(axpy(curve, h, k3)).v;
  std::vector<Vec2> out(curve.vertices().begin(), curve.vertices().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return PolyCurve(std::move(out));
}

PolyCurve advance(const PolyCurve& curve, double h, Method method, const VelocityField& v0) {
  if (h == 0.0) return curve;
  return method == Method::kEuler ? axpy(curve, h, v0.v) : rk4_from(curve, h, v0.v);
}

}  // namespace

std::string_view method_name(Method m) { return m == Method::kEuler ? "euler" : "rk4"; }

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::kCompleted:
      return "Completed";
    case Termination::kLengthGuard:
      return "LengthGuard";
    case Termination::kNumericalFailure:
      return "NumericalFailure";
  }
  return "Unknown";
}

void FlowConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
  if (dt > kMaxStep) {
    throw InvalidArgument("dt = " + std::to_string(dt) + " exceeds the stability limit " +
                          std::to_string(kMaxStep));
  }
  if (!std::isfinite(t0) || !std::isfinite(t1)) throw InvalidArgument("time horizon must be finite");
  if (std::abs(t1 - t0) / dt > kMaxStepCount) throw InvalidArgument("too many steps");
  if (record_every == 0) throw InvalidArgument("record_every must be positive");
  if (!(min_length_guard >= 0.0)) throw InvalidArgument("min_length_guard must be non-negative");
}

std::vector<std::string> FlowConfig::warnings() const {
  std::vector<std::string> w;
  if (dt > kWarnStep) {
    w.push_back("dt = " + std::to_string(dt) + " is above " + std::to_string(kWarnStep) +
                "; forward Euler may overshoot");
  }
  return w;
}

std::size_t FlowConfig::step_count() const {
  const double span = std::abs(t1 - t0);
  if (span == 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
}

PolyCurve step_euler(const PolyCurve& curve, double h) {
  if (h == 0.0) return curve;
  return axpy(curve, h, flow_velocity(curve).v);
}

PolyCurve step_rk4(const PolyCurve& curve, double h) {
  if (h == 0.0) return curve;
  return rk4_from(curve, h, flow_velocity(curve).v);
}

Trajectory run_flow(const PolyCurve& initial, const FlowConfig& cfg) {
  cfg.validate();
  if (!initial.non_degenerate()) throw DegenerateCurve("initial curve has a zero-length edge");
  if (!(total_length(initial) > cfg.min_length_guard)) {
    throw InvalidArgument("initial length is below the length guard");
  }

  Trajectory traj;
  traj.warnings = cfg.warnings();
  const std::size_t steps = cfg.step_count();
  const double span = std::abs(cfg.t1 - cfg.t0);
  const double dir = cfg.t1 >= cfg.t0 ? 1.0 : -1.0;
  auto time_at = [&](std::size_t k) {
    return k >= steps ? cfg.t1 : cfg.t0 + dir * std::min(static_cast<double>(k) * cfg.dt, span);
  };

  auto push = [&](const PolyCurve& c, double t, const VelocityField& v) {
    traj.times.push_back(t);
    traj.states.push_back(c);
    traj.records.push_back(record(c, t, v));
  };

  PolyCurve current = initial;
  for (std::size_t k = 0;; ++k) {
    const double t = time_at(k);
    std::optional<VelocityField> vel;
    try {
      vel = flow_velocity(current);
    } catch (const ConstantMapGuard&) {
      traj.termination = Termination::kLengthGuard;
      break;
    } catch (const DegenerateCurve&) {
      traj.termination = Termination::kNumericalFailure;
      break;
    }
    const bool last = k == steps;
    if (last || k % cfg.record_every == 0) push(current, t, *vel);
    if (last) break;
    if (total_length(current) < cfg.min_length_guard) {
      if (traj.times.empty() || traj.times.back() != t) push(current, t, *vel);
      traj.termination = Termination::kLengthGuard;
      break;
    }
    const double h = time_at(k + 1) - t;
    try {
      PolyCurve next = advance(current, h, cfg.method, *vel);
      if (!next.non_degenerate()) {
        traj.termination = Termination::kNumericalFailure;
        break;
      }
      current = std::move(next);
    } catch (const Error&) {
      // Non-finite coordinates or a degenerate intermediate RK stage.
      traj.termination = Termination::kNumericalFailure;
      break;
    }
  }
  if (cfg.rescale_profile && dir > 0.0) {
    Trajectory profile = asymptotic_profile(traj);
    profile.warnings = std::move(traj.warnings);
    return profile;
  }
  return traj;
}

Trajectory asymptotic_profile(const Trajectory& traj) {
  if (!traj.forward()) throw InvalidArgument("asymptotic profile needs a forward trajectory");
  Trajectory out;
  out.termination = traj.termination;
  out.times = traj.times;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const PolyCurve& x = traj.states[k];
    const double t = traj.times[k];
    const double scale = std::exp(t);
    const Vec2 anchor = x[0];
    std::vector<Vec2> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = scale * (x[i] - anchor);
    y[0] = {0.0, 0.0};
    PolyCurve yc(std::move(y));
    out.records.push_back(record(yc, t));
    out.states.push_back(std::move(yc));
  }
  return out;
}

TrajectoryLength trajectory_h1ds_length(const Trajectory& traj) {
  TrajectoryLength out;
  out.partial.push_back(0.0);
  for (std::size_t k = 0; k + 1 < traj.records.size(); ++k) {
    const double dt = std::abs(traj.times[k + 1] - traj.times[k]);
    out.total += std::sqrt(traj.records[k].grad_sq_h1ds) * dt;
    out.partial.push_back(out.total);
  }
  return out;
}

}  // namespace h1flow
