#include <cmath>

#include "h1flow/simd/kernels.hpp"

namespace h1flow::simd::scalar {

void greens_row(double length, double scale, double s_i, std::span<const double> s,
                std::span<double> out) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double d = std::abs(s_i - s[j]);
    out[j] = -(std::exp(d - length) + std::exp(-d)) * scale;
  }
}

void kernel_apply(std::span<const double> g, std::size_t n, std::span<const double> wx,
                  std::span<const double> wy, std::span<double> out_x,
                  std::span<double> out_y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = g.data() + i * n;
    double ax = 0.0;
    double ay = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      ax += row[j] * wx[j];
      ay += row[j] * wy[j];
    }
    out_x[i] = ax;
    out_y[i] = ay;
  }
}

}  // namespace h1flow::simd::scalar
