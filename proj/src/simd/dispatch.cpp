#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "h1flow/errors.hpp"
#include "h1flow/simd/kernels.hpp"

namespace h1flow::simd {

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("H1FLOW_ISA")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  }
  return best_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(H1FLOW_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidArgument("instruction set " + std::string(isa_name(isa)) +
                          " is not supported on this CPU");
  }
  active().store(isa, std::memory_order_relaxed);
}

void greens_row(double length, double scale, double s_i, std::span<const double> s,
                std::span<double> out) {
#if defined(H1FLOW_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::greens_row(length, scale, s_i, s, out);
#endif
  scalar::greens_row(length, scale, s_i, s, out);
}

void kernel_apply(std::span<const double> g, std::size_t n, std::span<const double> wx,
                  std::span<const double> wy, std::span<double> out_x,
                  std::span<double> out_y) {
#if defined(H1FLOW_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::kernel_apply(g, n, wx, wy, out_x, out_y);
#endif
  scalar::kernel_apply(g, n, wx, wy, out_x, out_y);
}

}  // namespace h1flow::simd
