#include "h1flow/metric_distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace h1flow {

std::string_view path_mode_name(PathMode m) { return m == PathMode::kFull ? "full" : "quotient"; }

void CurvePath::validate() const {
  if (frames.size() < 2) throw MismatchedFrames("path needs at least two frames");
  const std::size_t n = frames.front().size();
  for (std::size_t k = 0; k < frames.size(); ++k) {
    if (frames[k].size() != n) {
      throw MismatchedFrames("frame " + std::to_string(k) + " has " +
                             std::to_string(frames[k].size()) + " vertices, expected " +
                             std::to_string(n));
    }
    if (!frames[k].non_degenerate()) {
      throw DegenerateCurve("frame " + std::to_string(k) + " has a zero-length edge");
    }
  }
}

double path_length_l2ds(const CurvePath& path) {
  path.validate();
  const std::size_t n = path.frames.front().size();
  const double dt = 1.0 / static_cast<double>(path.frames.size() - 1);
  double total = 0.0;
  std::vector<Vec2> mid(n);
  for (std::size_t k = 0; k + 1 < path.frames.size(); ++k) {
    const auto a = path.frames[k].vertices();
    const auto b = path.frames[k + 1].vertices();
    for (std::size_t i = 0; i < n; ++i) mid[i] = 0.5 * (a[i] + b[i]);
    const PolyCurve mc(mid);
    const ArcData arc = arc_data(mc);
    FrameData frame;
    if (path.mode == PathMode::kQuotient) frame = frame_data(mc);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Vec2 vel = (1.0 / dt) * (b[i] - a[i]);
      if (path.mode == PathMode::kQuotient) vel = dot(vel, frame.normal[i]) * frame.normal[i];
      acc += norm_sq(vel) * arc.ds[i];
    }
    total += std::sqrt(acc) * dt;
  }
  return total;
}

CurvePath shrink_path(const PolyCurve& curve, double lambda, std::size_t frames) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw InvalidArgument("shrink factor must lie in (0, 1]");
  if (frames < 2) throw InvalidArgument("a path needs at least two frames");
  CurvePath path;
  for (std::size_t k = 0; k < frames; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(frames - 1);
    path.frames.push_back(curve.scaled((1.0 - t) + t * lambda));
  }
  return path;
}

Twist sine_twist(std::size_t n, double amplitude, int waves) {
  Twist tw;
  tw.displacement.resize(n);
  const double w = 2.0 * std::numbers::pi * waves;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(n);
    tw.displacement[i] = amplitude * std::sin(w * u) / w;
  }
  return tw;
}

CurvePath reparam_path(const PolyCurve& curve, const Twist& twist, std::size_t frames) {
  const std::size_t n = curve.size();
  if (twist.displacement.size() != n) throw InvalidArgument("twist size does not match curve");
  if (frames < 2) throw InvalidArgument("a path needs at least two frames");
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) {
    theta[i] = static_cast<double>(i) / static_cast<double>(n) + twist.displacement[i];
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(theta[i + 1] > theta[i])) {
      throw NonMonotoneTwist("twist is not increasing at sample " + std::to_string(i));
    }
  }
  if (!(theta[n - 1] < theta[0] + 1.0)) throw NonMonotoneTwist("twist wraps more than one turn");

  CurvePath path;
  for (std::size_t k = 0; k < frames; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(frames - 1);
    std::vector<Vec2> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = static_cast<double>(i) / static_cast<double>(n);
      v[i] = sample_at_parameter(curve, (1.0 - t) * u + t * theta[i]);
    }
    path.frames.emplace_back(std::move(v));
  }
  return path;
}

CurvePath linear_path(const PolyCurve& from, const PolyCurve& to, std::size_t frames) {
  if (from.size() != to.size()) throw MismatchedFrames("endpoint vertex counts differ");
  if (frames < 2) throw InvalidArgument("a path needs at least two frames");
  CurvePath path;
  for (std::size_t k = 0; k < frames; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(frames - 1);
    std::vector<Vec2> v(from.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (1.0 - t) * from[i] + t * to[i];
    path.frames.emplace_back(std::move(v));
  }
  return path;
}

CurvePath zigzag_path(const CurvePath& base, std::size_t teeth) {
  base.validate();
  if (base.mode != PathMode::kFull) throw InvalidArgument("zigzag needs a full-mode base path");
  const std::size_t n = base.frames.front().size();
  if (teeth == 0 || n % 2 != 0 || (n / 2) % teeth != 0) {
    throw InvalidArgument("teeth must be positive and divide n/2");
  }
  const std::size_t fb = base.frames.size();
  const std::size_t fo = 2 * (fb - 1) + 1;
  const double nt = static_cast<double>(teeth);

  std::vector<double> phase(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(n);
    const double x = u * nt - std::floor(u * nt);  // position within the tooth
    phase[i] = 1.0 - std::abs(1.0 - 2.0 * x);
  }

  // Base path evaluated at a continuous time by linear interpolation between frames.
  auto base_at = [&](std::size_t i, double tau) {
    const double pos = std::clamp(tau, 0.0, 1.0) * static_cast<double>(fb - 1);
    auto k = static_cast<std::size_t>(pos);
    if (k >= fb - 1) return base.frames[fb - 1][i];
    const double f = pos - static_cast<double>(k);
    return (1.0 - f) * base.frames[k][i] + f * base.frames[k + 1][i];
  };

  CurvePath out;
  out.mode = base.mode;
  for (std::size_t k = 0; k < fo; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(fo - 1);
    std::vector<Vec2> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = base_at(i, 2.0 * t - phase[i]);
    out.frames.emplace_back(std::move(v));
  }
  return out;
}

CurvePath concatenate(std::span<const CurvePath> legs) {
  if (legs.empty()) throw InvalidArgument("nothing to concatenate");
  CurvePath out;
  out.mode = legs.front().mode;
  for (std::size_t l = 0; l < legs.size(); ++l) {
    const auto& f = legs[l].frames;
    if (f.empty()) continue;
    std::size_t start = 0;
    if (!out.frames.empty()) {
      const auto a = out.frames.back().vertices();
      const auto b = f.front().vertices();
      if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) {
        throw MismatchedFrames("leg " + std::to_string(l) + " does not start where the previous ends");
      }
      start = 1;
    }
    out.frames.insert(out.frames.end(), f.begin() + static_cast<std::ptrdiff_t>(start), f.end());
  }
  return out;
}

CurvePath reversed_path(const CurvePath& path) {
  CurvePath out = path;
  std::reverse(out.frames.begin(), out.frames.end());
  return out;
}

}  // namespace h1flow
