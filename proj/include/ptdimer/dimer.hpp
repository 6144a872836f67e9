#pragma once

#include <string_view>

#include "ptdimer/matrix2.hpp"

namespace ptdimer {

/// Quantities that fully determine the propagation through one dimer, in
/// units scaled by the coupling g.
///
///  n      = (n1 - n2) / 2g   effective index difference
///  n0     = (n1 + n2) / 2g   average index (common phase and scaling)
///  gamma  = Im(n)            gain-loss asymmetry, n = i*gamma for PT dimers
///  beta   = -Im(n0)          global exponential rate of the photon number
///  omega  = sqrt(1 + n^2)    complex dispersion relation
struct EffectiveParams {
  Complex n{};
  Complex n0{};
  double gamma = 0.0;
  double beta = 0.0;
  Complex omega{1.0, 0.0};
};

/// Builds the parameters of a generic dimer from the two complex waveguide
/// indices and the coupling.
EffectiveParams effective_params_from_indices(Complex n1, Complex n2, double g);

/// Principal root of 1 + n^2, with Re >= 0 and Im >= 0 when Re == 0.
Complex dispersion(Complex n);

/// The traceless coupling matrix [[n, 1], [1, -n]].
Matrix2c hamiltonian(Complex n);

/// sin(z)/z, switching to a truncated Taylor series for |z| below
/// kSincSeriesThreshold.
Complex sinc(Complex z);
inline constexpr double kSincSeriesThreshold = 1e-4;

/// U(zeta) = exp(i H zeta) = cos(omega zeta) 1 + i H zeta sinc(omega zeta).
///
/// Exact at the exceptional point omega = 0, where it reduces to 1 + i zeta H.
Matrix2c propagator(Complex n, double zeta);

/// Signature shared by the analytic propagator and test doubles for it.
using PropagatorFn = Matrix2c (*)(Complex n, double zeta);

enum class Regime { PTSymmetric, Kato, Broken, Generic };

std::string_view to_string(Regime regime);

/// Classifies a purely imaginary n = i*gamma by |gamma| against 1. Any other
/// n is Generic.
Regime classify_regime(const EffectiveParams& params);

}  // namespace ptdimer
