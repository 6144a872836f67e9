#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ptdimer/errors.hpp"
#include "ptdimer/quadrature.hpp"

using namespace ptdimer;

TEST_CASE("known integrals") {
  const auto r = integrate<3>(
      [](double t) {
        return std::array<double, 3>{std::sin(t), std::exp(t), t * t};
      },
      0.0, std::numbers::pi);
  CHECK(r.value[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.value[1] == doctest::Approx(std::exp(std::numbers::pi) - 1.0).epsilon(1e-12));
  CHECK(r.value[2] == doctest::Approx(std::pow(std::numbers::pi, 3) / 3.0).epsilon(1e-12));
  CHECK(r.error <= 1e-9 * r.value[1]);
}

TEST_CASE("oscillatory integrand over a long interval") {
  const auto r = integrate<1>([](double t) { return std::array<double, 1>{std::cos(t) * std::cos(t)}; }, 0.0,
                              100.0);
  CHECK(std::abs(r.value[0] - (50.0 + std::sin(200.0) / 4.0)) < 1e-9);
  CHECK(r.panels > 1);
}

TEST_CASE("degenerate and invalid intervals") {
  const auto zero = integrate<1>([](double) { return std::array<double, 1>{1.0}; }, 2.0, 2.0);
  CHECK(zero.value[0] == 0.0);
  CHECK_THROWS_AS(integrate<1>([](double) { return std::array<double, 1>{1.0}; }, 2.0, 1.0), QuadratureError);
}

TEST_CASE("failures are reported") {
  QuadratureOptions tight;
  tight.max_panels = 4;
  CHECK_THROWS_AS(
      integrate<1>([](double t) { return std::array<double, 1>{1.0 / std::sqrt(t)}; }, 0.0, 1.0, tight),
      QuadratureError);
  CHECK_THROWS_AS(
      integrate<1>([](double) { return std::array<double, 1>{std::nan("")}; }, 0.0, 1.0), QuadratureError);
}
