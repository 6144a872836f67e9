#include <doctest.h>

#include "ptdimer/configurations.hpp"
#include "ptdimer/errors.hpp"

using namespace ptdimer;

namespace {

const Complex I{0.0, 1.0};

bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-14; }

}  // namespace

TEST_CASE("table examples") {
  SUBCASE("gain-loss") {
    const auto p = effective_params({Kind::GainLoss, 1.5, 1.0, 0.5});
    CHECK(close(p.n, -0.5 * I));
    CHECK(close(p.n0, 1.5));
    CHECK(p.gamma == doctest::Approx(-0.5));
    CHECK(p.beta == 0.0);
  }
  SUBCASE("gain-passive") {
    const auto p = effective_params({Kind::GainPassive, 1.5, 1.0, 1.0});
    CHECK(close(p.n, -0.5 * I));
    // beta = -Im(n0) and n0 = (n1 + n2) / 2g fix the sign of the imaginary part.
    CHECK(close(p.n0, Complex{1.5, -0.5}));
    CHECK(p.gamma == doctest::Approx(-0.5));
    CHECK(p.beta == doctest::Approx(0.5));
  }
  SUBCASE("loss-loss") {
    DimerRealization r{Kind::LossLoss, 1.5, 1.0};
    r.n_imag1 = 1.4;
    r.n_imag2 = 0.4;
    const auto p = effective_params(r);
    CHECK(close(p.n, 0.5 * I));
    CHECK(close(p.n0, Complex{1.5, 0.9}));
    CHECK(p.gamma == doctest::Approx(0.5));
    CHECK(p.beta == doctest::Approx(-0.9));
  }
}

TEST_CASE("table rows agree with the index definitions") {
  for (Kind kind : kAllKinds) {
    for (double gamma : {-1.2, -1.0, -0.5, 0.5, 1.0, 1.2}) {
      DimerRealization r;
      try {
        r = realization_for_gamma(kind, gamma, 1.7, 0.8);
      } catch (const InvalidConfiguration&) {
        continue;
      }
      const auto p = effective_params(r);
      const auto [n1, n2] = waveguide_indices(r);
      const auto q = effective_params_from_indices(n1, n2, r.coupling);
      CAPTURE(to_string(kind));
      CAPTURE(gamma);
      CHECK(p.gamma == doctest::Approx(gamma).epsilon(1e-12));
      CHECK(close(p.n, q.n));
      CHECK(close(p.n0, q.n0));
      CHECK(p.beta == doctest::Approx(-p.n0.imag()).epsilon(1e-14));
      CHECK(std::abs(p.n.real()) < 1e-15);
      if (kind == Kind::GainLoss) CHECK(p.beta == 0.0);
      if (kind == Kind::GainGain || kind == Kind::GainPassive) CHECK(p.beta > 0.0);
      if (kind == Kind::PassiveLoss || kind == Kind::LossLoss) CHECK(p.beta < 0.0);
    }
  }
}

TEST_CASE("realization_for_gamma") {
  CHECK(realization_for_gamma(Kind::GainPassive, -0.5, 1.5, 1.0).n_imag == doctest::Approx(1.0));
  CHECK(realization_for_gamma(Kind::GainLoss, -1.2, 1.5, 1.0).n_imag == doctest::Approx(1.2));
  CHECK_THROWS_AS(realization_for_gamma(Kind::GainLoss, 0.5, 1.5, 1.0), InvalidConfiguration);
  CHECK_THROWS_AS(realization_for_gamma(Kind::PassiveLoss, 0.5, 1.5, 1.0), InvalidConfiguration);
  CHECK_THROWS_AS(realization_for_gamma(Kind::GainGain, 0.0, 1.5, 1.0), InvalidConfiguration);

  const auto gg = realization_for_gamma(Kind::GainGain, -0.5, 1.5, 1.0);
  CHECK(gg.n_imag1 == doctest::Approx(1.5));
  CHECK(gg.n_imag2 == doctest::Approx(0.5));
  const auto ll = realization_for_gamma(Kind::LossLoss, -0.5, 1.5, 1.0);
  CHECK(ll.n_imag1 == doctest::Approx(0.5));
  CHECK(ll.n_imag2 == doctest::Approx(1.5));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate({Kind::GainLoss, 1.5, 0.0, 0.5}), InvalidConfiguration);
  CHECK_THROWS_AS(validate({Kind::GainLoss, -1.0, 1.0, 0.5}), InvalidConfiguration);
  CHECK_THROWS_AS(validate({Kind::GainLoss, 1.5, 1.0, 0.0}), InvalidConfiguration);
  DimerRealization gg{Kind::GainGain, 1.5, 1.0};
  gg.n_imag1 = 1.0;
  CHECK_THROWS_AS(validate(gg), InvalidConfiguration);
  gg.n_imag2 = 2.0;
  CHECK_NOTHROW(validate(gg));
}

TEST_CASE("kind names round trip") {
  for (Kind kind : kAllKinds) CHECK(parse_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_kind("gain-gain-gain").has_value());
  CHECK(has_gain(Kind::GainPassive));
  CHECK_FALSE(has_gain(Kind::LossLoss));
}
