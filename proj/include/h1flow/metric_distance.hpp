#pragma once

// L2(ds) path length on curve space and the constructions that make the
// induced distance vanish: shrinking, reparametrizing, zigzagging.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "h1flow/curve.hpp"

namespace h1flow {

enum class PathMode { kFull, kQuotient };

std::string_view path_mode_name(PathMode m);

// Samples alpha(t_k) at uniform t_k in [0, 1], vertices matched by index.
struct CurvePath {
  std::vector<PolyCurve> frames;
  PathMode mode = PathMode::kFull;

  // Throws MismatchedFrames or DegenerateCurve.
  void validate() const;
};

// sum_k (sum_i |dalpha_i / dt|^2 ds_i)^{1/2} dt. Velocity, ds and the normal
// used by the quotient mode are evaluated on the midpoint curve of each
// interval.
double path_length_l2ds(const CurvePath& path);

// Frame k is ((1 - t_k) + t_k lambda) curve, lambda in (0, 1].
CurvePath shrink_path(const PolyCurve& curve, double lambda, std::size_t frames);

// Orientation-preserving circle map theta(u_i) = u_i + displacement_i, with
// u_i = i / n. Throws NonMonotoneTwist unless strictly increasing with total
// span below one turn.
struct Twist {
  std::vector<double> displacement;
};

// displacement(u) = amplitude sin(2 pi waves u) / (2 pi waves); monotone iff
// |amplitude| < 1.
Twist sine_twist(std::size_t n, double amplitude, int waves = 1);

// Frame k samples the polygon at parameters (1 - t_k) u_i + t_k theta(u_i).
CurvePath reparam_path(const PolyCurve& curve, const Twist& twist, std::size_t frames);

// Linear interpolation between two curves with equal vertex counts.
CurvePath linear_path(const PolyCurve& from, const PolyCurve& to, std::size_t frames);

// Each vertex follows the base path at double speed during a window
// [phase/2, phase/2 + 1/2], where phase is a tent function of u with `teeth`
// periods: 0 at the tooth centres, 1 halfway between. Vertices with phase 0
// move during the first half and hold; phase 1 holds then moves. Requires
// base in full mode and teeth dividing n/2. The result has 2(F-1)+1 frames.
CurvePath zigzag_path(const CurvePath& base, std::size_t teeth);

// Concatenation of paths with matching endpoints; the result keeps the
// frames of each leg with shared endpoints merged.
CurvePath concatenate(std::span<const CurvePath> legs);
CurvePath reversed_path(const CurvePath& path);

}  // namespace h1flow
