#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "h1flow/errors.hpp"
#include "h1flow/greens.hpp"
#include "h1flow/gradient.hpp"
#include "h1flow/simd/kernels.hpp"
#include "oracles.hpp"

using namespace h1flow;

namespace {

// Restores the active instruction set on scope exit.
struct IsaGuard {
  simd::Isa saved = simd::active_isa();
  ~IsaGuard() { simd::set_active_isa(saved); }
};

std::vector<double> sorted_arclengths(std::mt19937& rng, std::size_t n, double length) {
  std::uniform_real_distribution<double> u(0.0, length);
  std::vector<double> s(n);
  for (auto& v : s) v = u(rng);
  s[0] = 0.0;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("dispatch reports a supported instruction set") {
  CHECK(simd::isa_supported(simd::Isa::kScalar));
  CHECK(simd::isa_supported(simd::best_isa()));
  CHECK(simd::isa_supported(simd::active_isa()));
  CHECK(simd::isa_name(simd::Isa::kScalar) == "scalar");
  IsaGuard guard;
  simd::set_active_isa(simd::Isa::kScalar);
  CHECK(simd::active_isa() == simd::Isa::kScalar);
  if (!simd::isa_supported(simd::Isa::kAvx2)) {
    CHECK_THROWS_AS(simd::set_active_isa(simd::Isa::kAvx2), InvalidArgument);
  }
}

#if defined(H1FLOW_HAVE_AVX2)
TEST_CASE("avx2 greens_row matches the scalar reference") {
  if (!simd::isa_supported(simd::Isa::kAvx2)) return;
  std::mt19937 rng(11);
  for (double length : {1e-9, 1e-3, 0.5, 2.0, 6.3, 16.0, 80.0, 700.0}) {
    for (std::size_t n : {1u, 3u, 4u, 5u, 17u, 256u, 513u}) {
      const auto s = sorted_arclengths(rng, n, length);
      const double scale = -0.5 / std::expm1(-length);
      std::vector<double> ref(n), vec(n);
      for (std::size_t i = 0; i < n; i += std::max<std::size_t>(1, n / 7)) {
        simd::scalar::greens_row(length, scale, s[i], s, ref);
        simd::avx2::greens_row(length, scale, s[i], s, vec);
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(vec[j] == doctest::Approx(ref[j]).epsilon(4e-16));
        }
      }
    }
  }
}

TEST_CASE("avx2 kernel_apply matches the scalar reference") {
  if (!simd::isa_supported(simd::Isa::kAvx2)) return;
  std::mt19937 rng(5);
  std::normal_distribution<double> g(0.0, 1.0);
  for (std::size_t n : {1u, 3u, 4u, 7u, 64u, 255u, 512u}) {
    std::vector<double> m(n * n), wx(n), wy(n);
    for (auto& v : m) v = g(rng);
    for (auto& v : wx) v = g(rng);
    for (auto& v : wy) v = g(rng);
    std::vector<double> rx(n), ry(n), vx(n), vy(n);
    simd::scalar::kernel_apply(m, n, wx, wy, rx, ry);
    simd::avx2::kernel_apply(m, n, wx, wy, vx, vy);
    for (std::size_t i = 0; i < n; ++i) {
      double bound_x = 0.0;
      double bound_y = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        bound_x += std::abs(m[i * n + j] * wx[j]);
        bound_y += std::abs(m[i * n + j] * wy[j]);
      }
      // Reordered summation: error within n eps times the absolute sum.
      CHECK(std::abs(vx[i] - rx[i]) <= 2.0 * n * 1.2e-16 * bound_x);
      CHECK(std::abs(vy[i] - ry[i]) <= 2.0 * n * 1.2e-16 * bound_y);
    }
  }
}
#endif

TEST_CASE("flow velocity agrees across instruction sets") {
  IsaGuard guard;
  std::mt19937 rng(3);
  const PolyCurve c = oracle::SmoothStar::random(rng).sample(301);
  simd::set_active_isa(simd::Isa::kScalar);
  const VelocityField ref = flow_velocity(c);
  simd::set_active_isa(simd::best_isa());
  const VelocityField best = flow_velocity(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(std::abs(best.v[i].x - ref.v[i].x) <= 1e-13);
    CHECK(std::abs(best.v[i].y - ref.v[i].y) <= 1e-13);
  }
  CHECK(best.grad_norm_sq_h1ds == doctest::Approx(ref.grad_norm_sq_h1ds).epsilon(1e-13));
}

TEST_CASE("kernel matrix is symmetric under every instruction set") {
  IsaGuard guard;
  std::mt19937 rng(9);
  const PolyCurve c = oracle::SmoothStar::random(rng).sample(130);
  for (simd::Isa isa : {simd::Isa::kScalar, simd::best_isa()}) {
    simd::set_active_isa(isa);
    const KernelMatrix km = kernel_matrix(c);
    for (std::size_t i = 0; i < km.n; ++i) {
      for (std::size_t j = 0; j < km.n; ++j) REQUIRE(km(i, j) == km(j, i));
    }
  }
}
