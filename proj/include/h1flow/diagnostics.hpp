#pragma once

// Per-state scalar monitors and trajectory-level checks.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "h1flow/curve.hpp"
#include "h1flow/gradient.hpp"

namespace h1flow {

struct Trajectory;

struct DiagnosticsRecord {
  double t = 0.0;
  double length = 0.0;
  double area = 0.0;       // signed
  double iso_ratio = 0.0;  // L^2 / (4 pi |A|)
  double deficit = 0.0;    // L^2 - 4 pi A
  double linf = 0.0;
  double l2ds = 0.0;
  double xu_l2 = 0.0;
  double min_edge = 0.0;
  double chord_arc_min = 0.0;
  double max_abs_k = 0.0;
  double rescaled_max_k = 0.0;  // e^{-t} max |k|
  double grad_sq_h1ds = 0.0;
  bool embeddedness_ok = false;
};

DiagnosticsRecord record(const PolyCurve& curve, double t);
// Reuses an already computed velocity of the same curve.
DiagnosticsRecord record(const PolyCurve& curve, double t, const VelocityField& velocity);

struct EmbeddednessCheck {
  bool ok = false;
  double lhs = 0.0;  // chord_arc_min
  double rhs = 0.0;  // (L^2 sqrt(2 + |X|_inf^2) / 4) exp(L^2 sqrt(2 + |X|_inf^2) / 4)
};

// Sufficient condition for the flow from this state on to stay embedded.
EmbeddednessCheck embeddedness_condition(const PolyCurve& curve);
EmbeddednessCheck embeddedness_condition(double chord_arc, double length, double linf);

struct MonitorVerdict {
  std::string name;
  double worst_violation = 0.0;  // largest increase between consecutive records
  std::size_t worst_step = 0;    // record index where it ends
  double slack = 0.0;
  bool pass = true;
};

struct MonotonicityReport {
  std::vector<MonitorVerdict> verdicts;  // length, linf, xu_l2, l2ds
  // sup_t D_Y(t) / D_X(t_0) with D_Y(t) = e^{2t} D_X(t).
  double profile_deficit_ratio_sup = 0.0;
  double rescaled_max_k_sup = 0.0;

  bool all_pass() const;
  // Throws InvalidArgument for an unknown monitor name.
  const MonitorVerdict& verdict(std::string_view name) const;
};

inline constexpr double kDefaultMonotoneSlack = 1e-6;

// Requires at least two records.
MonotonicityReport monotonicity_report(const Trajectory& traj,
                                       double slack = kDefaultMonotoneSlack);

}  // namespace h1flow
