#include "h1flow/greens.hpp"

#include <cmath>
#include <string>

#include "h1flow/simd/kernels.hpp"

namespace h1flow {

namespace {

// 1 / (2 (1 - e^{-L})); multiplying numerator and denominator of the cosh/sinh
// form by e^{-L/2} keeps every exponent non-positive.
double kernel_scale(double length) { return -0.5 / std::expm1(-length); }

void check_length(double length) {
  if (!(length > 0.0)) {
    throw OutOfDomain("Green's function needs positive length, got " + std::to_string(length));
  }
}

}  // namespace

double greens_value(double length, double s, double s_tilde) {
  check_length(length);
  double d = std::abs(s - s_tilde);
  if (d > length) d = std::fmod(d, length);
  return -(std::exp(d - length) + std::exp(-d)) * kernel_scale(length);
}

KernelMatrix kernel_matrix(const PolyCurve& curve) {
  ArcData arc = arc_data(curve);
  if (arc.length < kMinKernelLength) {
    throw ConstantMapGuard("curve length " + std::to_string(arc.length) +
                           " is below the kernel guard");
  }
  const std::size_t n = curve.size();
  KernelMatrix km;
  km.n = n;
  km.length = arc.length;
  km.g.resize(n * n);
  const double scale = kernel_scale(arc.length);
  const std::span<const double> s(arc.s);
  // Upper triangle per row, then mirror: G is exactly symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    simd::greens_row(arc.length, scale, arc.s[i], s.subspan(i),
                     std::span<double>(km.g.data() + i * n + i, n - i));
    for (std::size_t j = i + 1; j < n; ++j) km.g[j * n + i] = km.g[i * n + j];
  }
  km.ds = std::move(arc.ds);
  km.s = std::move(arc.s);
  return km;
}

Field apply_greens(const KernelMatrix& km, std::span<const Vec2> field) {
  const std::size_t n = km.n;
  if (field.size() != n) {
    throw InvalidArgument("field size does not match kernel size");
  }
  std::vector<double> wx(n), wy(n), ox(n), oy(n);
  for (std::size_t j = 0; j < n; ++j) {
    wx[j] = field[j].x * km.ds[j];
    wy[j] = field[j].y * km.ds[j];
  }
  simd::kernel_apply(km.g, n, wx, wy, ox, oy);
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {ox[i], oy[i]};
  return out;
}

Field convolve_K(const KernelMatrix& km, std::span<const Vec2> field) {
  Field out = apply_greens(km, field);
  for (auto& v : out) v = -v;
  return out;
}

Field convolve_K(const PolyCurve& curve, std::span<const Vec2> field) {
  return convolve_K(kernel_matrix(curve), field);
}

std::vector<double> row_quadrature(const KernelMatrix& km) {
  std::vector<double> out(km.n);
  for (std::size_t i = 0; i < km.n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < km.n; ++j) acc += km(i, j) * km.ds[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace h1flow
