#include "ptdimer/moment_oracle.hpp"

#include <cmath>
#include <string>

#include "ptdimer/errors.hpp"

namespace ptdimer {
namespace {

Matrix2c rk4_step(const Matrix2c& n, const DriftAndPump& dp, double h) {
  const Matrix2c k1 = moment_ode_rhs({n}, dp);
  const Matrix2c k2 = moment_ode_rhs({n + (0.5 * h) * k1}, dp);
  const Matrix2c k3 = moment_ode_rhs({n + (0.5 * h) * k2}, dp);
  const Matrix2c k4 = moment_ode_rhs({n + h * k3}, dp);
  return n + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Matrix2c advance(Matrix2c n, const DriftAndPump& dp, double distance, double step) {
  if (distance == 0.0) return n;
  const auto steps = static_cast<long>(std::ceil(distance / step - 1e-9));
  const double h = distance / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    n = rk4_step(n, dp, h);
    if (!is_finite(n)) {
      throw IntegrationBlowUp("moment integration became non-finite after " + std::to_string(i + 1) +
                              " steps");
    }
  }
  return n;
}

void require_step(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidArgument("oracle step must be positive");
}

}  // namespace

DriftAndPump DriftAndPump::from_indices(Complex n1, Complex n2, double g) {
  if (!(g > 0.0) || !std::isfinite(g)) throw InvalidConfiguration("coupling g must be positive and finite");
  if (!is_finite(n1) || !is_finite(n2)) throw InvalidConfiguration("indices must be finite");
  DriftAndPump dp;
  dp.drift = {n1 / g, 1.0, 1.0, n2 / g};
  dp.pump = {2.0 * std::max(0.0, -n1.imag()) / g, 2.0 * std::max(0.0, -n2.imag()) / g};
  return dp;
}

Matrix2c moment_ode_rhs(const MomentState& state, const DriftAndPump& dp) {
  const Matrix2c& n = state.moments;
  Matrix2c rate = Complex(0.0, 1.0) * (n * dp.drift - adjoint(dp.drift) * n);
  rate.m11 += dp.pump[0];
  rate.m22 += dp.pump[1];
  return rate;
}

MomentState integrate_moments(const MomentState& initial, const DriftAndPump& dp, double zeta, double step) {
  const double grid[] = {zeta};
  return integrate_moments(initial, dp, std::span<const double>(grid), step).front();
}

std::vector<MomentState> integrate_moments(const MomentState& initial, const DriftAndPump& dp,
                                           std::span<const double> zetas, double step) {
  require_step(step);
  if (!is_physical(initial, 1e-10)) throw InvalidArgument("initial moments must be Hermitian and positive");
  std::vector<MomentState> out;
  out.reserve(zetas.size());
  Matrix2c n = initial.moments;
  double at = 0.0;
  for (double zeta : zetas) {
    if (!std::isfinite(zeta) || zeta < at) throw InvalidArgument("zetas must be non-negative and increasing");
    n = advance(n, dp, zeta - at, step);
    at = zeta;
    out.push_back({n});
  }
  return out;
}

bool is_physical(const MomentState& state, double tolerance) {
  const Matrix2c& n = state.moments;
  const double scale = std::max(1.0, max_abs(n));
  const double tol = tolerance * scale;
  if (std::abs(n.m12 - std::conj(n.m21)) > tol) return false;
  if (std::abs(n.m11.imag()) > tol || std::abs(n.m22.imag()) > tol) return false;
  if (n.m11.real() < -tol || n.m22.real() < -tol) return false;
  return det(n).real() >= -1e-10 * scale * scale;
}

}  // namespace ptdimer
