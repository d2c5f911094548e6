#pragma once

// Data-parallel inner loops of the Green's-kernel flow, with a scalar
// reference implementation and vectorized variants chosen at runtime.

#include <cstddef>
#include <span>
#include <string_view>

namespace h1flow::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
// Widest variant the running CPU supports.
Isa best_isa();
// Variant used by the dispatching entry points below. Starts at best_isa(),
// or at the value of the H1FLOW_ISA environment variable ("scalar"/"avx2").
Isa active_isa();
// Throws InvalidArgument if the CPU lacks the instruction set.
void set_active_isa(Isa isa);

// Green's kernel row, in the overflow-free form
//   out[j] = -(exp(d - L) + exp(-d)) * scale,  d = |s_i - s[j]|,
// where scale = 1 / (2 (1 - exp(-L))). Requires 0 <= s[j], s_i < L.
void greens_row(double length, double scale, double s_i, std::span<const double> s,
                std::span<double> out);

// Dense row-major n x n matrix applied to two right-hand sides:
//   out_x[i] = sum_j g[i n + j] wx[j], likewise for y.
void kernel_apply(std::span<const double> g, std::size_t n, std::span<const double> wx,
                  std::span<const double> wy, std::span<double> out_x,
                  std::span<double> out_y);

namespace scalar {
void greens_row(double length, double scale, double s_i, std::span<const double> s,
                std::span<double> out);
void kernel_apply(std::span<const double> g, std::size_t n, std::span<const double> wx,
                  std::span<const double> wy, std::span<double> out_x,
                  std::span<double> out_y);
}  // namespace scalar

#if defined(H1FLOW_HAVE_AVX2)
namespace avx2 {
void greens_row(double length, double scale, double s_i, std::span<const double> s,
                std::span<double> out);
void kernel_apply(std::span<const double> g, std::size_t n, std::span<const double> wx,
                  std::span<const double> wy, std::span<double> out_x,
                  std::span<double> out_y);
}  // namespace avx2
#endif

}  // namespace h1flow::simd
