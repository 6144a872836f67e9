#pragma once

#include <array>
#include <span>
#include <vector>

#include "ptdimer/matrix2.hpp"

namespace ptdimer {

/// Second moments N_ij = <a_i^+ a_j> of the two waveguide modes.
struct MomentState {
  Matrix2c moments{};

  static MomentState vacuum() { return {}; }
  static MomentState fock(double photons1, double photons2) {
    return {Matrix2c::diagonal(photons1, photons2)};
  }
};

/// Linear drift and normally ordered pump of the Langevin model in the
/// unscaled frame: M = [[n1/g, 1], [1, n2/g]], D = diag(2 max(0, -Im n_j)/g).
struct DriftAndPump {
  Matrix2c drift{};
  std::array<double, 2> pump{};

  static DriftAndPump from_indices(Complex n1, Complex n2, double g);
};

/// dN/dzeta = i (N M - M^+ N) + D.
Matrix2c moment_ode_rhs(const MomentState& state, const DriftAndPump& dp);

inline constexpr double kDefaultOracleStep = 1e-3;

/// Classical fixed-step fourth-order Runge-Kutta integration from 0 to zeta.
/// The step is shrunk so that an integer number of steps lands on zeta.
MomentState integrate_moments(const MomentState& initial, const DriftAndPump& dp, double zeta,
                              double step = kDefaultOracleStep);

/// Same trajectory sampled at each of the increasing `zetas`.
std::vector<MomentState> integrate_moments(const MomentState& initial, const DriftAndPump& dp,
                                           std::span<const double> zetas, double step = kDefaultOracleStep);

/// Hermitian, real non-negative diagonal and det >= -1e-10.
bool is_physical(const MomentState& state, double tolerance = 1e-12);

}  // namespace ptdimer
