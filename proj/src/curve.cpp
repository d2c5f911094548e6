#include "h1flow/curve.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace h1flow {

namespace {

void require_non_degenerate(const PolyCurve& curve, const char* what) {
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!(curve.edge_length(i) > 0.0)) {
      throw DegenerateCurve(std::string(what) + ": zero-length edge at vertex " +
                            std::to_string(i));
    }
  }
}

}  // namespace

PolyCurve::PolyCurve(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw InvalidArgument("curve needs at least 3 vertices, got " +
                          std::to_string(vertices_.size()));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!std::isfinite(vertices_[i].x) || !std::isfinite(vertices_[i].y)) {
      throw InvalidArgument("non-finite coordinate at vertex " + std::to_string(i));
    }
  }
}

double PolyCurve::min_edge_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) m = std::min(m, edge_length(i));
  return m;
}

bool PolyCurve::non_degenerate() const { return min_edge_length() > 0.0; }

PolyCurve PolyCurve::translated(Vec2 offset) const {
  auto v = vertices_;
  for (auto& p : v) p += offset;
  return PolyCurve(std::move(v));
}

PolyCurve PolyCurve::scaled(double factor) const {
  auto v = vertices_;
  for (auto& p : v) p *= factor;
  return PolyCurve(std::move(v));
}

PolyCurve PolyCurve::rotated(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  auto v = vertices_;
  for (auto& p : v) p = {c * p.x - s * p.y, s * p.x + c * p.y};
  return PolyCurve(std::move(v));
}

PolyCurve PolyCurve::reindexed(std::size_t shift) const {
  const std::size_t n = size();
  std::vector<Vec2> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = vertices_[(k + shift) % n];
  return PolyCurve(std::move(v));
}

PolyCurve PolyCurve::reversed() const {
  std::vector<Vec2> v(vertices_.rbegin(), vertices_.rend());
  return PolyCurve(std::move(v));
}

ArcData arc_data(const PolyCurve& curve) {
  require_non_degenerate(curve, "arc_data");
  const std::size_t n = curve.size();
  ArcData a;
  a.s.resize(n);
  a.ds.resize(n);
  a.edge.resize(n);
  for (std::size_t i = 0; i < n; ++i) a.edge[i] = curve.edge_length(i);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a.s[i] = acc;
    acc += a.edge[i];
  }
  a.length = acc;
  for (std::size_t i = 0; i < n; ++i) {
    a.ds[i] = 0.5 * (a.edge[(i + n - 1) % n] + a.edge[i]);
  }
  return a;
}

double total_length(const PolyCurve& curve) {
  double acc = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) acc += curve.edge_length(i);
  return acc;
}

double signed_area(const PolyCurve& curve) {
  const std::size_t n = curve.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += cross(curve[i], curve[(i + 1) % n]);
  return 0.5 * acc;
}

FrameData frame_data(const PolyCurve& curve) {
  const ArcData arc = arc_data(curve);
  const std::size_t n = curve.size();
  FrameData f;
  f.tangent.resize(n);
  f.normal.resize(n);
  f.turning.resize(n);
  f.curvature.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const Vec2 din = curve.edge(prev);
    const Vec2 dout = curve.edge(i);
    const Vec2 uin = (1.0 / arc.edge[prev]) * din;
    const Vec2 uout = (1.0 / arc.edge[i]) * dout;
    Vec2 t = uin + uout;
    const double tn = norm(t);
    // A full reversal (cusp) has no average direction; fall back to the outgoing edge.
    t = tn > 1e-300 ? (1.0 / tn) * t : uout;
    f.tangent[i] = t;
    f.normal[i] = perp(t);
    f.turning[i] = std::atan2(cross(din, dout), dot(din, dout));
    f.curvature[i] = f.turning[i] / arc.ds[i];
  }
  return f;
}

double linf_norm(std::span<const Vec2> field) {
  double m = 0.0;
  for (const auto& v : field) m = std::max(m, norm(v));
  return m;
}

Norms norms(const PolyCurve& curve, std::span<const Vec2> field) {
  const std::size_t n = curve.size();
  if (field.size() != n) {
    throw InvalidArgument("field size " + std::to_string(field.size()) +
                          " does not match curve size " + std::to_string(n));
  }
  const ArcData arc = arc_data(curve);
  double sum_du = 0.0;
  double sum_ds = 0.0;
  double deriv_du = 0.0;
  double deriv_ds = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v2 = norm_sq(field[i]);
    sum_du += v2;
    sum_ds += v2 * arc.ds[i];
    const double dv2 = norm_sq(field[(i + 1) % n] - field[i]);
    deriv_du += dv2;
    deriv_ds += dv2 / arc.edge[i];
  }
  const double nn = static_cast<double>(n);
  Norms out;
  out.linf = linf_norm(field);
  out.l2_du = std::sqrt(sum_du / nn);
  out.l2_ds = std::sqrt(sum_ds);
  // du = 1/n per edge, so |dv/du|^2 du = n |dv|^2.
  out.h1_du = std::sqrt(sum_du / nn + nn * deriv_du);
  out.h1_ds = std::sqrt(sum_ds + deriv_ds);
  return out;
}

double xu_l2(const PolyCurve& curve) {
  const std::size_t n = curve.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += norm_sq(curve.edge(i));
  return std::sqrt(static_cast<double>(n) * acc);
}

ChordArc chord_arc_min(const PolyCurve& curve) {
  const ArcData arc = arc_data(curve);
  const std::size_t n = curve.size();
  const auto pts = curve.vertices();
  ChordArc best{std::numeric_limits<double>::infinity(), 0, 1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double direct = arc.s[j] - arc.s[i];
      const double sep = std::min(direct, arc.length - direct);
      const double ratio = norm(pts[j] - pts[i]) / sep;
      if (ratio < best.value) best = {ratio, i, j};
    }
  }
  return best;
}

Vec2 sample_at_parameter(const PolyCurve& curve, double u) {
  const std::size_t n = curve.size();
  double w = u - std::floor(u);
  double pos = w * static_cast<double>(n);
  auto k = static_cast<std::size_t>(pos);
  if (k >= n) k = n - 1;
  const double frac = pos - static_cast<double>(k);
  return curve[k] + frac * curve.edge(k);
}

}  // namespace h1flow
