#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "ptdimer/dimer.hpp"

namespace ptdimer {

/// The five experimentally feasible realizations of an effective
/// PT-symmetric dimer. Gain media carry Im(n_j) < 0, loss media Im(n_j) > 0.
enum class Kind { GainLoss, GainGain, GainPassive, PassiveLoss, LossLoss };

inline constexpr std::array<Kind, 5> kAllKinds{Kind::GainLoss, Kind::GainGain, Kind::GainPassive,
                                               Kind::PassiveLoss, Kind::LossLoss};

/// Kebab-case identifier used on the command line and in CSV metadata
/// ("gain-loss", "gain-gain", ...).
std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view text);

/// True for realizations with at least one gain medium.
bool has_gain(Kind kind);

/// True for kinds parameterized by two imaginary magnitudes (gain-gain and
/// loss-loss); the others use a single one.
bool uses_two_imaginary_parts(Kind kind);

/// Raw material description of one dimer.
///
/// `n_imag` is read by gain-loss, gain-passive and passive-loss;
/// `n_imag1`/`n_imag2` by gain-gain and loss-loss. Unused fields are ignored.
struct DimerRealization {
  Kind kind = Kind::GainLoss;
  double n_real = 1.5;
  double coupling = 1.0;
  double n_imag = 0.0;
  double n_imag1 = 0.0;
  double n_imag2 = 0.0;
};

/// Throws InvalidConfiguration unless g, nR and the used imaginary
/// magnitudes are positive and finite.
void validate(const DimerRealization& r);

/// The complex waveguide indices (n1, n2) of the realization.
std::pair<Complex, Complex> waveguide_indices(const DimerRealization& r);

/// n, n0, gamma, beta per realization row, and omega = dispersion(n).
EffectiveParams effective_params(const DimerRealization& r);

/// Inverse map used by the figure presets: a realization of `kind` whose
/// effective gamma equals `gamma`.
///
/// Gain-loss, gain-passive and passive-loss only reach gamma < 0. Gain-gain
/// and loss-loss reach both signs; the remaining freedom is fixed by giving
/// the weaker medium g|gamma| and the stronger one 3g|gamma|.
DimerRealization realization_for_gamma(Kind kind, double gamma, double n_real, double coupling);

}  // namespace ptdimer
