#include "ptdimer/dimer.hpp"

#include <cmath>

#include "ptdimer/errors.hpp"

namespace ptdimer {
namespace {

constexpr double kRegimeTolerance = 1e-12;

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw InvalidConfiguration(std::string(what) + " must be finite");
}

}  // namespace

EffectiveParams effective_params_from_indices(Complex n1, Complex n2, double g) {
  require_finite(n1, "n1");
  require_finite(n2, "n2");
  if (!(g > 0.0) || !std::isfinite(g)) throw InvalidConfiguration("coupling g must be positive and finite");
  EffectiveParams p;
  p.n = (n1 - n2) / (2.0 * g);
  p.n0 = (n1 + n2) / (2.0 * g);
  p.gamma = p.n.imag();
  p.beta = -p.n0.imag();
  p.omega = dispersion(p.n);
  return p;
}

Complex dispersion(Complex n) {
  require_finite(n, "n");
  Complex root = std::sqrt(1.0 + n * n);
  // std::sqrt honours the sign of a zero imaginary part, so -x - 0i maps to
  // -i sqrt(x). Pin the branch on the imaginary axis.
  if (root.real() == 0.0) root = {0.0, std::abs(root.imag())};
  return root;
}

Matrix2c hamiltonian(Complex n) {
  require_finite(n, "n");
  return {n, 1.0, 1.0, -n};
}

Complex sinc(Complex z) {
  if (std::abs(z) < kSincSeriesThreshold) {
    const Complex z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0));
  }
  return std::sin(z) / z;
}

Matrix2c propagator(Complex n, double zeta) {
  require_finite(n, "n");
  if (!std::isfinite(zeta)) throw InvalidConfiguration("zeta must be finite");
  const Complex phase = dispersion(n) * zeta;
  const Complex c = std::cos(phase);
  const Complex s = Complex(0.0, zeta) * sinc(phase);
  return {c + s * n, s, s, c - s * n};
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::PTSymmetric: return "pt-symmetric";
    case Regime::Kato: return "kato";
    case Regime::Broken: return "broken";
    case Regime::Generic: return "generic";
  }
  return "unknown";
}

Regime classify_regime(const EffectiveParams& params) {
  if (std::abs(params.n.real()) > kRegimeTolerance) return Regime::Generic;
  const double magnitude = std::abs(params.n.imag());
  if (std::abs(magnitude - 1.0) <= kRegimeTolerance) return Regime::Kato;
  return magnitude < 1.0 ? Regime::PTSymmetric : Regime::Broken;
}

}  // namespace ptdimer
