#include <doctest.h>

#include <cmath>

#include "ptdimer/errors.hpp"
#include "ptdimer/moment_oracle.hpp"

using namespace ptdimer;

TEST_CASE("right-hand side") {
  const auto lossless = DriftAndPump::from_indices(1.5, 1.5, 1.0);
  CHECK(max_abs(moment_ode_rhs(MomentState::vacuum(), lossless)) == 0.0);

  const auto gain_loss = DriftAndPump::from_indices(Complex{1.5, -0.5}, Complex{1.5, 0.5}, 1.0);
  CHECK(gain_loss.pump[0] == 1.0);
  CHECK(gain_loss.pump[1] == 0.0);
  CHECK(max_abs(moment_ode_rhs(MomentState::vacuum(), gain_loss) - Matrix2c::diagonal(1.0, 0.0)) == 0.0);

  const MomentState state{Matrix2c{0.7, Complex{0.1, 0.2}, Complex{0.1, -0.2}, 0.4}};
  const Matrix2c d = moment_ode_rhs(state, DriftAndPump::from_indices(1.2, 1.9, 0.8));
  CHECK(std::abs(trace(d)) < 1e-15);
  CHECK(max_abs(d - adjoint(d)) < 1e-15);
}

TEST_CASE("lossless coupler") {
  const auto dp = DriftAndPump::from_indices(1.5, 1.5, 1.0);
  for (double zeta : {0.5, 1.0, 3.0}) {
    const auto state = integrate_moments(MomentState::fock(1.0, 0.0), dp, zeta);
    CHECK(std::abs(state.moments.m11 - std::cos(zeta) * std::cos(zeta)) < 1e-8);
  }
}

TEST_CASE("passive dimers stay dark") {
  const auto dp = DriftAndPump::from_indices(1.5, Complex{1.5, 1.0}, 1.0);
  CHECK(max_abs(integrate_moments(MomentState::vacuum(), dp, 4.0).moments) == 0.0);
}

TEST_CASE("fourth-order convergence") {
  const auto dp = DriftAndPump::from_indices(Complex{1.5, -0.6}, Complex{1.5, 0.2}, 1.0);
  const MomentState start = MomentState::fock(1.0, 0.0);
  const auto coarse = integrate_moments(start, dp, 2.0, 0.1).moments;
  const auto medium = integrate_moments(start, dp, 2.0, 0.05).moments;
  const auto fine = integrate_moments(start, dp, 2.0, 0.025).moments;
  const double ratio = max_abs(coarse - medium) / max_abs(medium - fine);
  CHECK(ratio == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("trajectory sampling and physicality") {
  const auto dp = DriftAndPump::from_indices(Complex{1.5, -0.9}, Complex{1.5, -0.3}, 1.0);
  const std::vector<double> zetas{0.5, 1.0, 2.0};
  const auto states = integrate_moments(MomentState::fock(0.0, 1.0), dp, zetas);
  REQUIRE(states.size() == 3);
  for (std::size_t k = 0; k < zetas.size(); ++k) {
    CHECK(is_physical(states[k], 1e-10));
    const auto direct = integrate_moments(MomentState::fock(0.0, 1.0), dp, zetas[k]);
    CHECK(max_abs(states[k].moments - direct.moments) <= 1e-9 * max_abs(direct.moments));
  }
}

TEST_CASE("invalid input") {
  const auto dp = DriftAndPump::from_indices(1.5, 1.5, 1.0);
  CHECK_THROWS_AS(integrate_moments(MomentState::vacuum(), dp, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(integrate_moments(MomentState::vacuum(), dp, -1.0), InvalidArgument);
  CHECK_THROWS_AS(integrate_moments(MomentState{Matrix2c::diagonal(-1.0, 0.0)}, dp, 1.0), InvalidArgument);
  const auto runaway = DriftAndPump::from_indices(Complex{1.5, -400.0}, 1.5, 1.0);
  CHECK_THROWS_AS(integrate_moments(MomentState::fock(1.0, 0.0), runaway, 10.0, 0.01), IntegrationBlowUp);
}
