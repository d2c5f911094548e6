#include "h1flow/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "h1flow/errors.hpp"

namespace h1flow {

namespace {

constexpr int kMaxIterations = 50;
constexpr double kInvE = 1.0 / std::numbers::e;

double initial_guess(double x) {
  if (x < -0.25) {
    // Branch-point series in p = sqrt(2(ex + 1)).
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * x + 1.0)));
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  }
  if (x < 0.0) return x * (1.0 + x * (-1.0 + x * 1.5));
  if (x < 3.0) return std::log1p(x);
  const double l = std::log(x);
  const double ll = std::log(l);
  return l - ll + ll / l;
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) return x;
  if (x < -kInvE) {
    // -1/e is not representable; admit the rounding neighbourhood of the branch point.
    if (x < -kInvE * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
      throw OutOfDomain("lambert_w0: argument " + std::to_string(x) + " below -1/e");
    }
    return -1.0;
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w = initial_guess(x);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    // Halley step.
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    if (!std::isfinite(step)) break;
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w < -1.0 ? -1.0 : w;
}

double lambert_w0_of_exp(double y) {
  if (std::isnan(y)) return y;
  if (y == std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return 0.0;
  // Newton in v = log w on g(v) = e^v + v - y. g is convex and increasing, so
  // the iteration converges monotonically after the first step.
  // y - log(y) >= 1 on [1, inf).
  double v = y < 1.0 ? y - std::exp(y - 1.0) : std::log(y - std::log(y));
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ev = std::exp(v);
    const double g = ev + v - y;
    const double step = g / (ev + 1.0);
    v -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(v))) break;
  }
  return std::exp(v);
}

CircleSolution::CircleSolution(double r0) : r0_(r0), c_(0.0) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw OutOfDomain("circle solution needs r0 > 0");
  }
  const double r2 = r0 * r0;
  c_ = r2 + std::log(r2);
}

double CircleSolution::radius(double t) const {
  return std::sqrt(lambert_w0_of_exp(c_ - 2.0 * t));
}

double CircleSolution::profile_radius_limit() const { return std::exp(0.5 * c_); }

double circle_radius(const CircleSolution& sol, double t) { return sol.radius(t); }

}  // namespace h1flow
