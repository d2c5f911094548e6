#pragma once

// Time integration of the H1(ds) curve shortening flow, forward and backward.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "h1flow/curve.hpp"
#include "h1flow/diagnostics.hpp"

namespace h1flow {

enum class Method { kEuler, kRk4 };
enum class Termination { kCompleted, kLengthGuard, kNumericalFailure };

std::string_view method_name(Method m);
std::string_view termination_name(Termination t);

// Step sizes above this trigger a warning; above kMaxStep the config is rejected.
inline constexpr double kWarnStep = 0.5;
inline constexpr double kMaxStep = 2.0;

struct FlowConfig {
  double dt = 1e-2;
  double t0 = 0.0;
  double t1 = 1.0;  // t1 < t0 runs the flow backward
  Method method = Method::kEuler;
  double min_length_guard = 1e-8;
  std::size_t record_every = 1;
  // run_flow returns the asymptotic profile instead of X.
  bool rescale_profile = false;

  // Throws InvalidArgument.
  void validate() const;
  std::vector<std::string> warnings() const;
  std::size_t step_count() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PolyCurve> states;
  std::vector<DiagnosticsRecord> records;
  Termination termination = Termination::kCompleted;
  std::vector<std::string> warnings;

  std::size_t size() const { return times.size(); }
  bool forward() const { return times.size() < 2 || times.back() >= times.front(); }
};

// X + h V(X). h may be negative.
PolyCurve step_euler(const PolyCurve& curve, double h);
// Classical four-stage Runge-Kutta; each stage rebuilds the kernel.
PolyCurve step_rk4(const PolyCurve& curve, double h);

Trajectory run_flow(const PolyCurve& initial, const FlowConfig& cfg);

// Y(t) = e^t (X(t) - X(t, vertex 0)) for every state; records are recomputed
// on the Y states. Throws InvalidArgument for backward trajectories.
Trajectory asymptotic_profile(const Trajectory& traj);

struct TrajectoryLength {
  double total = 0.0;
  std::vector<double> partial;  // partial[k]: sum over the first k intervals
};

// Left-endpoint sum of ||V||_{H1(ds)} |dt| over recorded intervals.
TrajectoryLength trajectory_h1ds_length(const Trajectory& traj);

}  // namespace h1flow
