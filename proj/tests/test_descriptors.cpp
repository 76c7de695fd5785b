#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <curvesketch/analysis.hpp>
#include <curvesketch/descriptors.hpp>

using namespace curvesketch;

TEST_CASE("slfs: segment and closed convex polygon are infinite") {
  CHECK_FALSE(slfs_estimate(Polyline({{0.0, 0.0}, {3.0, 1.0}}), 0.1).finite());
  CHECK_FALSE(slfs_estimate(fixtures::regular_ngon(8), 0.1).finite());
  CHECK_FALSE(slfs_estimate(fixtures::regular_ngon(3), 0.05).finite());
}

TEST_CASE("slfs: stacked same-direction strands report the gap") {
  double g = 0.5;
  auto est = slfs_estimate(fixtures::hairpin(g), 0.05);
  REQUIRE(est.finite());
  CHECK(est.value >= g);
  CHECK(est.value <= g + 2 * 0.05);
  REQUIRE(est.witness.has_value());
  // The minimizing pair spans the two parallel strands.
  auto [p1, p2] = *est.witness;
  CHECK(std::abs(p1.y - p2.y) == Catch::Approx(g).margin(0.02));
  CHECK(std::abs(p1.x - p2.x) <= 0.05);
  CHECK(est.sample_step == 0.05);
}

TEST_CASE("slfs estimate is monotone non-increasing in the step") {
  Polyline hp = fixtures::hairpin(0.8);
  double prev = std::numeric_limits<double>::infinity();
  for (double step : {0.2, 0.1, 0.05}) {
    double v = slfs_estimate(hp, step).value;
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("slfs rejects non-positive step") {
  CHECK_THROWS_AS(slfs_estimate(fixtures::regular_ngon(4), 0.0),
                  std::invalid_argument);
}

TEST_CASE("sma membership: convex interior is empty") {
  Polyline gon = fixtures::regular_ngon(9);
  // Center and off-center interior points, including the equidistant center.
  CHECK_FALSE(sma_membership(gon, {0.0, 0.0}));
  CHECK_FALSE(sma_membership(gon, {0.3, -0.2}));
  CHECK_FALSE(sma_membership(gon, {2.0, 0.0}));  // outside, unique argmin
}

TEST_CASE("sma membership: mid-line between opposing strands") {
  double g = 0.5;
  Polyline hp = fixtures::hairpin(g);
  CHECK(sma_membership(hp, {5.0, g / 2.0}));
  CHECK(sma_membership(hp, {2.0, g / 2.0}));
  // Off the mid-line the argmin is unique.
  CHECK_FALSE(sma_membership(hp, {5.0, g / 4.0}));
  // Points on the curve never qualify.
  CHECK_FALSE(sma_membership(hp, {5.0, 0.0}));
}

TEST_CASE("sigma select oracles") {
  double two_over_e = 2.0 / std::exp(1.0);
  CHECK(sigma_select(4.0, two_over_e) == Catch::Approx(0.5));
  CHECK(sigma_select(8.0, two_over_e) == Catch::Approx(1.0));
  // epsilon -> 2 from below pushes sigma toward delta/4 from below.
  double delta = 10.0;
  CHECK(sigma_select(delta, 1.999999) <= delta / 4.0);
  CHECK(sigma_select(delta, 1.999999) ==
        Catch::Approx(delta / 4.0).epsilon(0.01));
}

TEST_CASE("sigma select output satisfies its own hypothesis") {
  for (double delta : {0.5, 2.0, 7.0})
    for (double eps_frac : {0.25, 0.1, 0.01}) {
      double eps = delta * eps_frac / 4.0;
      if (!(eps < 2.0)) continue;
      double sigma = sigma_select(delta, eps);
      CHECK(sigma * 4.0 * (1.0 + std::sqrt(std::log(2.0 / eps))) <=
            delta * (1.0 + 1e-12));
    }
}

TEST_CASE("sigma select rejects bad preconditions") {
  CHECK_THROWS_AS(sigma_select(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(sigma_select(4.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_select(4.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_select(4.0, 1.5), std::invalid_argument);  // > delta/4
}
