#include "h1flow/gradient.hpp"

#include <cmath>
#include <string>

namespace h1flow {

namespace {

void check_field(const PolyCurve& curve, std::span<const Vec2> field) {
  if (field.size() != curve.size()) {
    throw InvalidArgument("field size " + std::to_string(field.size()) +
                          " does not match curve size " + std::to_string(curve.size()));
  }
}

}  // namespace

VelocityField flow_velocity(const PolyCurve& curve, const KernelMatrix& km) {
  const std::size_t n = curve.size();
  if (km.n != n) throw InvalidArgument("kernel matrix built for a different curve");
  const auto x = curve.vertices();
  VelocityField out;
  out.v = apply_greens(km, x);
  for (std::size_t i = 0; i < n; ++i) out.v[i] = -x[i] - out.v[i];
  out.grad_norm_sq_h1ds = h1ds_inner(curve, out.v, out.v);
  double l2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) l2 += norm_sq(out.v[i]) * km.ds[i];
  out.grad_norm_l2ds = std::sqrt(l2);
  return out;
}

VelocityField flow_velocity(const PolyCurve& curve) {
  return flow_velocity(curve, kernel_matrix(curve));
}

Field flow_velocity_centered(const PolyCurve& curve, const KernelMatrix& km) {
  const std::size_t n = curve.size();
  const auto x = curve.vertices();
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 acc{};
    for (std::size_t j = 0; j < n; ++j) acc += (km(i, j) * km.ds[j]) * (x[i] - x[j]);
    out[i] = acc;
  }
  return out;
}

double h1ds_inner(const PolyCurve& curve, std::span<const Vec2> v, std::span<const Vec2> w) {
  check_field(curve, v);
  check_field(curve, w);
  const ArcData arc = arc_data(curve);
  const std::size_t n = curve.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = (i + 1) % n;
    acc += dot(v[i], w[i]) * arc.ds[i];
    acc += dot(v[k] - v[i], w[k] - w[i]) / arc.edge[i];
  }
  return acc;
}

double length_directional_derivative(const PolyCurve& curve, std::span<const Vec2> v) {
  check_field(curve, v);
  const std::size_t n = curve.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = curve.edge(i);
    const double len = norm(e);
    if (!(len > 0.0)) {
      throw DegenerateCurve("length derivative: zero-length edge at vertex " + std::to_string(i));
    }
    acc += dot(v[(i + 1) % n] - v[i], e) / len;
  }
  return acc;
}

}  // namespace h1flow
