#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "h1flow/flow.hpp"
#include "h1flow/io.hpp"
#include "h1flow/lambert_w.hpp"
#include "oracles.hpp"

using namespace h1flow;

namespace {

double mean_radius(const PolyCurve& c) {
  double acc = 0.0;
  for (const auto& p : c.vertices()) acc += norm(p);
  return acc / static_cast<double>(c.size());
}

double max_coord_diff(const PolyCurve& a, const PolyCurve& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max({m, std::abs(a[i].x - b[i].x), std::abs(a[i].y - b[i].y)});
  }
  return m;
}

}  // namespace

TEST_CASE("zero steps are the identity") {
  const PolyCurve c = oracle::regular_polygon(64);
  CHECK(max_coord_diff(step_euler(c, 0.0), c) == 0.0);
  CHECK(max_coord_diff(step_rk4(c, 0.0), c) == 0.0);
}

TEST_CASE("euler step on the unit circle shrinks the radius by about h/2") {
  const PolyCurve c = oracle::regular_polygon(256);
  const double h = 1e-3;
  const double r1 = mean_radius(step_euler(c, h));
  CHECK((1.0 - r1) == doctest::Approx(h / 2).epsilon(1e-3));
}

TEST_CASE("euler forward then backward returns with O(h^2) error") {
  std::mt19937 rng(10);
  const PolyCurve c = oracle::SmoothStar::random(rng).sample(128);
  for (double h : {1e-2, 1e-3}) {
    const PolyCurve back = step_euler(step_euler(c, h), -h);
    CHECK(max_coord_diff(back, c) <= 10.0 * h * h);
  }
}

TEST_CASE("rk4 single step against the semi-discrete reference and the exact circle") {
  const PolyCurve c = oracle::regular_polygon(256);
  const double h = 1e-2;
  const PolyCurve one = step_rk4(c, h);
  PolyCurve fine = c;
  for (int k = 0; k < 100; ++k) fine = step_rk4(fine, h / 100);
  // Local truncation error of one RK4 step: O(h^5).
  CHECK(max_coord_diff(one, fine) <= 1e-9);
  // Against the continuum circle the spatial quadrature error dominates.
  const double exact = CircleSolution(1.0).radius(h);
  CHECK(mean_radius(one) == doctest::Approx(exact).epsilon(5e-6));
}

TEST_CASE("rk4 and euler differ at second order") {
  std::mt19937 rng(14);
  const PolyCurve c = oracle::SmoothStar::random(rng).sample(128);
  double prev_ratio = 0.0;
  double prev_gap = INFINITY;
  for (double h : {4e-2, 2e-2, 1e-2}) {
    const double gap = max_coord_diff(step_rk4(c, h), step_euler(c, h));
    CHECK(gap < prev_gap);
    prev_gap = gap;
    prev_ratio = gap / (h * h);
  }
  CHECK(prev_ratio < 10.0);
}

TEST_CASE("flow config validation") {
  FlowConfig cfg;
  cfg.dt = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.dt = 3.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.dt = 1.0;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.warnings().size() == 1);
  cfg.dt = 1e-9;
  cfg.t1 = 1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.dt = 0.1;
  cfg.record_every = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.record_every = 1;
  cfg.t1 = 1.05;
  CHECK(cfg.step_count() == 11);
  cfg.t1 = -1.0;
  CHECK(cfg.step_count() == 10);
}

TEST_CASE("run_flow on the unit circle follows the Lambert W radius") {
  FlowConfig cfg;
  cfg.dt = 1e-3;
  cfg.t1 = 1.0;
  cfg.record_every = 100;
  const Trajectory traj = run_flow(oracle::regular_polygon(256), cfg);
  REQUIRE(traj.termination == Termination::kCompleted);
  CHECK(traj.size() == 11);
  CHECK(traj.times.back() == 1.0);
  CHECK(traj.states.size() == traj.records.size());
  const CircleSolution sol(1.0);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    CHECK(mean_radius(traj.states[k]) == doctest::Approx(sol.radius(traj.times[k])).epsilon(5e-3));
    CHECK(traj.states[k].non_degenerate());
  }
  CHECK(mean_radius(traj.states.back()) ==
        doctest::Approx(std::sqrt(oracle::lambert_w0(std::exp(-1.0)))).epsilon(5e-3));
}

TEST_CASE("backward run reaches the eternal solution at t = -1") {
  FlowConfig cfg;
  cfg.dt = 1e-3;
  cfg.t1 = -1.0;
  cfg.record_every = 250;
  const Trajectory traj = run_flow(oracle::regular_polygon(256), cfg);
  REQUIRE(traj.termination == Termination::kCompleted);
  CHECK_FALSE(traj.forward());
  CHECK(traj.times.back() == -1.0);
  CHECK(mean_radius(traj.states.back()) ==
        doctest::Approx(std::sqrt(oracle::lambert_w0(std::exp(3.0)))).epsilon(5e-3));
  CHECK_THROWS_AS(asymptotic_profile(traj), InvalidArgument);
}

TEST_CASE("square with the coarse step: length decreases at every record") {
  GeneratorSpec spec;
  spec.kind = ShapeKind::kSquare;
  spec.n = 200;
  FlowConfig cfg;
  cfg.dt = 0.2;
  cfg.t1 = 10.0;
  const Trajectory traj = run_flow(generate(spec), cfg);
  REQUIRE(traj.size() == 51);
  for (std::size_t k = 1; k < traj.size(); ++k) {
    CHECK(traj.records[k].length < traj.records[k - 1].length);
  }
}

TEST_CASE("length guard stops an undershooting run") {
  FlowConfig cfg;
  cfg.dt = 0.5;
  cfg.t1 = 200.0;
  cfg.min_length_guard = 1e-6;
  const Trajectory traj = run_flow(oracle::regular_polygon(32, 0.1), cfg);
  CHECK(traj.termination == Termination::kLengthGuard);
  CHECK(traj.times.back() < 200.0);
  CHECK(traj.records.back().length < 1e-6);

  cfg.min_length_guard = 10.0;
  CHECK_THROWS_AS(run_flow(oracle::regular_polygon(32, 0.1), cfg), InvalidArgument);
}

TEST_CASE("run_flow records on the requested cadence plus the final state") {
  FlowConfig cfg;
  cfg.dt = 0.1;
  cfg.t1 = 1.05;
  cfg.record_every = 4;
  const Trajectory traj = run_flow(oracle::regular_polygon(40), cfg);
  REQUIRE(traj.size() == 4);
  CHECK(traj.times[1] == doctest::Approx(0.4));
  CHECK(traj.times[2] == doctest::Approx(0.8));
  CHECK(traj.times[3] == 1.05);
}

TEST_CASE("asymptotic profile of a circle") {
  FlowConfig cfg;
  cfg.dt = 1e-2;
  cfg.t1 = 6.0;
  cfg.method = Method::kRk4;
  cfg.record_every = 50;
  const PolyCurve c = oracle::regular_polygon(128).translated({0.3, -0.2});
  const Trajectory traj = run_flow(c, cfg);
  const Trajectory prof = asymptotic_profile(traj);
  REQUIRE(prof.size() == traj.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(norm(prof.states[0][i] - (c[i] - c[0])) <= 1e-15);
  }
  const double limit = CircleSolution(1.0).profile_radius_limit();
  for (std::size_t k = 0; k < prof.size(); ++k) {
    CHECK(prof.states[k][0] == Vec2{});
    // Circle through the origin of radius e^t r(t): the diameter is the farthest vertex.
    const double diameter = linf_norm(prof.states[k].vertices());
    const double expected = 2.0 * std::exp(prof.times[k]) * CircleSolution(1.0).radius(prof.times[k]);
    CHECK(diameter == doctest::Approx(expected).epsilon(2e-3));
  }
  CHECK(linf_norm(prof.states.back().vertices()) == doctest::Approx(2.0 * limit).epsilon(2e-3));
}

TEST_CASE("rescale_profile returns the profile trajectory") {
  FlowConfig cfg;
  cfg.dt = 0.1;
  cfg.t1 = 1.0;
  cfg.rescale_profile = true;
  const Trajectory traj = run_flow(oracle::regular_polygon(40).translated({1.0, 1.0}), cfg);
  for (const auto& s : traj.states) CHECK(s[0] == Vec2{});
}

TEST_CASE("trajectory H1(ds) length converges") {
  FlowConfig cfg;
  cfg.dt = 1e-2;
  cfg.method = Method::kRk4;
  cfg.t1 = 8.0;
  const PolyCurve c = oracle::regular_polygon(128);
  const TrajectoryLength l8 = trajectory_h1ds_length(run_flow(c, cfg));
  cfg.t1 = 16.0;
  const TrajectoryLength l16 = trajectory_h1ds_length(run_flow(c, cfg));
  CHECK(std::isfinite(l8.total));
  CHECK(l8.total > 0.0);
  // Continuum circle: |V|_{H1(ds)}^2 = 2 pi (r rdot^2 + rdot^2 / r).
  const CircleSolution sol(1.0);
  const double tail = oracle::simpson(
      [&](double t) {
        const double r = sol.radius(t);
        const double rdot = -r / (r * r + 1.0);
        return std::sqrt(2.0 * std::numbers::pi * (r * rdot * rdot + rdot * rdot / r));
      },
      8.0, 16.0, 400);
  CHECK((l16.total - l8.total) == doctest::Approx(tail).epsilon(1e-2));
  CHECK(l16.total - l8.total < 0.05 * l8.total);
  // Successive horizon doublings shrink the increment.
  const double d1 = l16.partial[400] - l16.partial[200];
  const double d2 = l16.partial[800] - l16.partial[400];
  const double d3 = l16.partial[1600] - l16.partial[800];
  CHECK(d2 < d1);
  CHECK(d3 < d2);

  Trajectory single;
  single.times = {0.0};
  single.states = {c};
  single.records = {record(c, 0.0)};
  CHECK(trajectory_h1ds_length(single).total == 0.0);
}

TEST_CASE("reindexing commutes with the flow") {
  std::mt19937 rng(27);
  const PolyCurve c = oracle::SmoothStar::random(rng).sample(90);
  PolyCurve a = c;
  PolyCurve b = c.reindexed(37);
  for (int k = 0; k < 20; ++k) {
    a = step_euler(a, 0.1);
    b = step_euler(b, 0.1);
    CHECK(max_coord_diff(a.reindexed(37), b) <= 1e-12);
  }
}
