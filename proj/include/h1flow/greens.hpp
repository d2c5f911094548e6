#pragma once

// The H1(ds) Green's function G, solving G_ss - G = delta periodically on a
// curve of length L, and the positive unit-mass convolution kernel K = -G.

#include <cstddef>
#include <span>
#include <vector>

#include "h1flow/curve.hpp"

namespace h1flow {

// Kernel assembly refuses curves shorter than this.
inline constexpr double kMinKernelLength = 1e-12;

// cosh(|s - s~| - L/2) / (2 sinh(-L/2)), with |s - s~| reduced into [0, L].
// Throws OutOfDomain if L <= 0.
double greens_value(double length, double s, double s_tilde);

struct KernelMatrix {
  std::size_t n = 0;
  std::vector<double> g;   // row-major n x n, g[i n + j] = G(s_i, s_j)
  std::vector<double> ds;  // vertex quadrature weights
  std::vector<double> s;
  double length = 0.0;

  double operator()(std::size_t i, std::size_t j) const { return g[i * n + j]; }
  std::span<const double> row(std::size_t i) const { return {g.data() + i * n, n}; }
};

// Throws DegenerateCurve, or ConstantMapGuard when L < kMinKernelLength.
KernelMatrix kernel_matrix(const PolyCurve& curve);

// out_i = sum_j G_ij ds_j field_j
Field apply_greens(const KernelMatrix& km, std::span<const Vec2> field);

// (field * K)_i = sum_j field_j (-G_ij) ds_j
Field convolve_K(const PolyCurve& curve, std::span<const Vec2> field);
Field convolve_K(const KernelMatrix& km, std::span<const Vec2> field);

// sum_j G_ij ds_j for every row; the continuum value is -1.
std::vector<double> row_quadrature(const KernelMatrix& km);

}  // namespace h1flow
