#include <doctest.h>

#include <cmath>
#include <random>

#include "h1flow/greens.hpp"
#include "oracles.hpp"

using namespace h1flow;

TEST_CASE("greens_value matches the cosh/sinh closed form") {
  // -coth(1)/2 from direct long-double evaluation.
  const double diag = oracle::greens_closed_form(2.0, 0.3, 0.3);
  CHECK(diag == doctest::Approx(-0.656518).epsilon(1e-6));
  CHECK(greens_value(2.0, 0.3, 0.3) == doctest::Approx(diag).epsilon(1e-15));

  for (double L : {0.01, 0.7, 2.0, 6.283, 30.0}) {
    CHECK(greens_value(L, 0.0, L / 2) == doctest::Approx(-1.0 / (2.0 * std::sinh(L / 2))).epsilon(1e-14));
    for (int k = 0; k <= 20; ++k) {
      const double s = L * k / 20.0;
      const double v = greens_value(L, s, 0.1 * L);
      CHECK(v < 0.0);
      CHECK(v == doctest::Approx(oracle::greens_closed_form(L, s, 0.1 * L)).epsilon(1e-14));
      CHECK(std::abs(v) <= 0.5 / std::tanh(L / 2) * (1 + 1e-15));
    }
  }
}

TEST_CASE("greens_value edge behaviour") {
  CHECK_THROWS_AS(greens_value(0.0, 0.0, 0.0), OutOfDomain);
  CHECK_THROWS_AS(greens_value(-1.0, 0.0, 0.0), OutOfDomain);
  CHECK(greens_value(1e-10, 0.0, 0.0) < -1e9);
  CHECK(greens_value(1e-6, 0.0, 0.0) < greens_value(1e-3, 0.0, 0.0));
  // Arguments beyond one period are reduced.
  CHECK(greens_value(2.0, 0.0, 2.5) == doctest::Approx(greens_value(2.0, 0.0, 0.5)));
  // Large lengths stay finite.
  CHECK(std::isfinite(greens_value(5000.0, 0.0, 2500.0)));
}

TEST_CASE("greens Lipschitz bound in the arclength difference") {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const double L = 0.1 + 20.0 * u(rng);
    const double s = L * u(rng);
    const double st = L * u(rng);
    const double delta = 1e-3 * L * u(rng) + 1e-9;
    const double diff = std::abs(greens_value(L, s + delta, st) - greens_value(L, s, st));
    CHECK(diff <= (0.5 + 1e-9) * delta);
  }
}

TEST_CASE("kernel matrix invariants") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const PolyCurve c = oracle::SmoothStar::random(rng).sample(80 + 13 * trial);
    const KernelMatrix km = kernel_matrix(c);
    double maxabs = 0.0;
    for (std::size_t i = 0; i < km.n; ++i) {
      for (std::size_t j = 0; j < km.n; ++j) {
        CHECK(km(i, j) == km(j, i));
        CHECK(km(i, j) < 0.0);
        maxabs = std::max(maxabs, std::abs(km(i, j)));
      }
      CHECK(std::abs(km(i, i)) == doctest::Approx(0.5 / std::tanh(km.length / 2)).epsilon(1e-14));
    }
    CHECK(maxabs == doctest::Approx(0.5 / std::tanh(km.length / 2)).epsilon(1e-14));

    const KernelMatrix moved = kernel_matrix(c.translated({10.0, -3.0}));
    for (std::size_t i = 0; i < km.g.size(); ++i) {
      CHECK(moved.g[i] == doctest::Approx(km.g[i]).epsilon(1e-13));
    }
  }
}

TEST_CASE("kernel assembly guards") {
  CHECK_THROWS_AS(kernel_matrix(PolyCurve({{0, 0}, {0, 0}, {1, 0}})), DegenerateCurve);
  CHECK_THROWS_AS(kernel_matrix(oracle::regular_polygon(16, 1e-14)), ConstantMapGuard);
  CHECK_NOTHROW(kernel_matrix(oracle::regular_polygon(16, 1e-9)));
}

TEST_CASE("row quadrature approaches -1 under refinement") {
  double prev_defect = 1.0;
  for (std::size_t n : {64u, 128u, 256u, 512u}) {
    const KernelMatrix km = kernel_matrix(oracle::regular_polygon(n));
    double defect = 0.0;
    for (double q : row_quadrature(km)) defect = std::max(defect, std::abs(q + 1.0));
    CHECK(defect < prev_defect);
    prev_defect = defect;
    if (n == 512) CHECK(defect <= 2e-3);
  }
}

TEST_CASE("convolution with K") {
  const PolyCurve c = oracle::regular_polygon(512);
  const Vec2 k{2.0, -1.0};
  const Field out = convolve_K(c, Field(512, k));
  for (const auto& v : out) CHECK(norm(v - k) <= 2e-3 * norm(k));
  for (const auto& v : convolve_K(c, Field(512))) CHECK(v == Vec2{});

  auto l2ds = [](const PolyCurve& curve, const Field& f) {
    const ArcData a = arc_data(curve);
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += norm_sq(f[i]) * a.ds[i];
    return std::sqrt(acc);
  };
  const Field x(c.vertices().begin(), c.vertices().end());
  CHECK(l2ds(c, convolve_K(c, x)) <= l2ds(c, x));
}

TEST_CASE("Young-type inequality on random curves and fields") {
  std::mt19937 rng(21);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const PolyCurve c = oracle::SmoothStar::random(rng, 4, 0.2).sample(40 + trial % 23);
    const ArcData a = arc_data(c);
    Field f(c.size());
    for (auto& v : f) v = {g(rng), g(rng)};
    const Field out = convolve_K(c, f);
    double in2 = 0.0;
    double out2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      in2 += norm_sq(f[i]) * a.ds[i];
      out2 += norm_sq(out[i]) * a.ds[i];
    }
    CHECK(std::sqrt(out2) <= std::sqrt(in2) + 1e-9);
  }
}
