#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptdimer/configurations.hpp"
#include "ptdimer/dimer.hpp"
#include "ptdimer/quadrature.hpp"

namespace ptdimer {

/// Normally ordered noise injected by the gain media, expressed through the
/// propagator of the effective dimer:
///
///   n_j^(00)(zeta) = guide1 * int_0^zeta |U_j1(t)|^2 e^{rate t} dt
///                  + guide2 * int_0^zeta |U_j2(t)|^2 e^{rate t} dt
///
/// and likewise for the first-order cross correlation with U_1k^* U_2k.
struct PumpWeights {
  double guide1 = 0.0;
  double guide2 = 0.0;
  double rate = 0.0;

  bool active() const { return guide1 != 0.0 || guide2 != 0.0; }
};

/// Effective parameters together with the noise model of one dimer.
class Dimer {
 public:
  /// Per-kind closed-form parameters and pump formulas, written in terms
  /// of gamma and beta.
  static Dimer from_realization(const DimerRealization& realization);
  static Dimer from_params(Kind kind, const EffectiveParams& params);

  /// Any pair of complex indices. Each gain medium (Im n_j < 0) pumps its own
  /// guide at rate -2 Im(n_j)/g; loss media only attenuate.
  static Dimer from_indices(Complex n1, Complex n2, double g);

  const EffectiveParams& params() const { return params_; }
  const PumpWeights& pump() const { return pump_; }
  std::optional<Kind> kind() const { return kind_; }

 private:
  Dimer(std::optional<Kind> kind, const EffectiveParams& params, const PumpWeights& pump)
      : kind_(kind), params_(params), pump_(pump) {}

  std::optional<Kind> kind_;
  EffectiveParams params_;
  PumpWeights pump_;
};

PumpWeights pump_weights(Kind kind, const EffectiveParams& params);

struct EvalOptions {
  QuadratureOptions quadrature{};
  /// Absolute observables are refused once growth_envelope exceeds this.
  /// Ratios (shares, q parameters) are scale free and ignore it.
  double growth_limit = 1e12;
  PropagatorFn propagator = &ptdimer::propagator;
};

/// exp(2 (max(beta, 0) + |Im omega|) zeta): the exponential envelope of
/// e^{2 beta zeta} |U(zeta)|^2 and of the gain integrals.
double growth_envelope(const EffectiveParams& params, double zeta);

/// Photon numbers and first-order correlation produced from vacuum input.
struct VacuumMoments {
  double n1 = 0.0;
  double n2 = 0.0;
  Complex n12{};
};

struct PhotonNumbers {
  double n1 = 0.0;
  double n2 = 0.0;
};

struct Shares {
  double share1 = 0.0;
  double share2 = 0.0;
};

/// Spontaneous photon numbers and the cross correlation <a1^+ a2> from the
/// vacuum, in one adaptive quadrature. Passive kinds return exact zeros.
VacuumMoments spontaneous_generation(const Dimer& dimer, double zeta, const EvalOptions& options = {});

Complex cross_correlation_vacuum(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// |n12|^2 / (n1 n2) for the vacuum input. Throws UndefinedObservable
/// without gain or at zeta = 0.
double q_vacuum(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// Second-order two-point correlation g2 = 1 + q for the vacuum input.
double g2_vacuum(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// Full moment matrix N_ij = <a_i^+ a_j>(zeta) for an arbitrary initial
/// moment matrix: e^{2 beta zeta} conj(U) N(0) U^T plus the vacuum part.
Matrix2c mean_photon_moments(const Dimer& dimer, const Matrix2c& initial, double zeta,
                             const EvalOptions& options = {});

/// Single photon launched into the first waveguide, |10>.
PhotonNumbers single_photon_numbers(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// Two-photon N00N input (|20> + |02>)/sqrt(2).
PhotonNumbers noon_photon_numbers(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// <a1^+ a2^+ a1 a2> for the two-photon N00N input.
double noon_two_point(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// n1212 / (n1 n2) - 1 for the two-photon N00N input; -1 at zeta = 0.
double q_noon(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// n_j / (n1 + n2). Throws UndefinedObservable for a vanishing total.
Shares renormalize(const PhotonNumbers& numbers);

/// Renormalized spontaneous-generation shares at zeta > 0.
Shares spontaneous_shares(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// Renormalized single-photon shares.
Shares single_photon_shares(const Dimer& dimer, double zeta, const EvalOptions& options = {});

/// Large-zeta limit of the renormalized shares outside the PT-symmetric
/// regime:
///
///   share1 = 1 / (2 gamma (gamma + sqrt(gamma^2 - 1)))
///   share2 = (gamma + sqrt(gamma^2 - 1)) / (2 gamma)
///
/// gamma is signed; gamma > 0 favours the second guide and gamma < 0 the
/// first. Throws UndefinedObservable for |gamma| < 1.
Shares asymptotic_shares(double gamma);

enum class Observable { Spontaneous, VacuumBunching, SinglePhoton, NoonNumbers, NoonBunching, All };

std::string_view to_string(Observable observable);
std::optional<Observable> parse_observable(std::string_view text);

/// True when the observable is undefined at zeta = 0.
bool requires_positive_zeta(Observable observable);

/// One sample along zeta. Fields not produced by the selected observable stay
/// empty; fields that could not be evaluated at this point are empty and
/// `gap` says why.
struct CurvePoint {
  std::optional<PhotonNumbers> numbers;
  std::optional<Shares> shares;
  std::optional<Complex> n12;
  std::optional<double> q00;
  std::optional<double> q2002;
  std::string gap;
  /// The point could not be evaluated at all (quadrature failure).
  bool failed = false;
};

struct ObservableCurve {
  std::vector<double> zetas;
  std::vector<CurvePoint> values;

  std::size_t gap_count() const;
};

/// Evaluates `observable` at every grid point. The grid must be strictly
/// increasing and non-negative.
ObservableCurve sample_curve(const Dimer& dimer, Observable observable, std::span<const double> zetas,
                             const EvalOptions& options = {});

/// Evenly spaced grid with `steps` points from zeta_min to zeta_max inclusive.
std::vector<double> linear_grid(double zeta_min, double zeta_max, std::size_t steps);

}  // namespace ptdimer
