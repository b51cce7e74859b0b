#include "xitail/gram.hpp"

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "xitail/errors.hpp"
#include "xitail/specfun.hpp"

using namespace xitail;
constexpr double kPi = std::numbers::pi;

TEST_CASE("first Gram points against the bisection oracle") {
  // theta crosses 0 and pi inside [10, 30]
  const double g0 = oracles::bisect(oracles::theta, 14.0, 20.0, 1e-10);
  const double g1 =
      oracles::bisect([](double t) { return oracles::theta(t) - kPi; }, 20.0,
                      30.0, 1e-10);
  CHECK(g0 == doctest::Approx(17.8455995404).epsilon(1e-10));
  CHECK(g1 == doctest::Approx(23.1702827012).epsilon(1e-10));
  CHECK(gram_point(0).t == doctest::Approx(g0).epsilon(1e-10));
  CHECK(gram_point(1).t == doctest::Approx(g1).epsilon(1e-10));
}

TEST_CASE("residuals and the defining equation") {
  for (std::int64_t nu : {0LL, 1LL, 10LL, 1000LL, 1000000LL}) {
    const GramPoint g = gram_point(nu);
    CHECK_MESSAGE(g.residual < 1e-9, "nu = ", nu);
    CHECK(std::llround(oracles::theta(g.t) / kPi) == nu);
  }
}

TEST_CASE("abscissas strictly increase with the index") {
  double prev = gram_point(0).t;
  for (std::int64_t nu = 1; nu <= 60; ++nu) {
    const double t = gram_point(nu).t;
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("window enumeration matches the index range") {
  const auto gps = gram_points_in(1.0e4, 1.0e3);
  REQUIRE(!gps.empty());
  // no gaps, no duplicates: indices are consecutive
  for (std::size_t i = 1; i < gps.size(); ++i)
    CHECK(gps[i].nu == gps[i - 1].nu + 1);
  CHECK(gps.front().t >= 1.0e4);
  CHECK(gps.back().t <= 1.0e4 + 1.0e3);
  // just-outside neighbours fall off the window
  CHECK(gram_point(gps.front().nu - 1).t < 1.0e4);
  CHECK(gram_point(gps.back().nu + 1).t > 1.0e4 + 1.0e3);

  // count formula (1/pi) H ln P0 within 1%; frozen count 1182
  const double predicted = 1.0e3 * 0.5 * std::log(1.0e4 / (2.0 * kPi)) / kPi;
  CHECK(std::abs((double)gps.size() - predicted) / predicted < 0.01);
  CHECK(gps.size() == 1182);
}

TEST_CASE("narrow window yields at most one point, never an error") {
  const auto gps = gram_points_in(1.0e4, 0.1);
  CHECK(gps.size() <= 1);
}

TEST_CASE("spacing follows pi / theta'") {
  const auto gps = gram_points_in(5000.0, 40.0);
  REQUIRE(gps.size() >= 2);
  for (std::size_t i = 1; i < gps.size(); ++i) {
    const double spacing = gps[i].t - gps[i - 1].t;
    const double expect =
        kPi / theta_jet(gps[i - 1].t, ThetaMode::Exact).dtheta;
    CHECK(std::abs(spacing - expect) / expect < 0.2);
  }
}

TEST_CASE("mean spacing decreases between nu ~ 1e3 and nu ~ 1e4") {
  auto mean_gap = [](std::int64_t nu0) {
    double acc = 0.0;
    double prev = gram_point(nu0).t;
    for (std::int64_t nu = nu0 + 1; nu <= nu0 + 100; ++nu) {
      const double t = gram_point(nu).t;
      acc += t - prev;
      prev = t;
    }
    return acc / 100.0;
  };
  CHECK(mean_gap(1000) > mean_gap(10000 - 100));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(gram_point(-1), DomainError);
  CHECK_THROWS_AS(gram_points_in(49.0, 10.0), DomainError);
  CHECK_THROWS_AS(gram_points_in(100.0, 0.0), DomainError);
  CHECK_THROWS_AS(gram_points_in(100.0, 101.0), DomainError);
}
