#include "ptdimer/configurations.hpp"

#include <cmath>
#include <string>

#include "ptdimer/errors.hpp"

namespace ptdimer {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidConfiguration(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::GainLoss: return "gain-loss";
    case Kind::GainGain: return "gain-gain";
    case Kind::GainPassive: return "gain-passive";
    case Kind::PassiveLoss: return "passive-loss";
    case Kind::LossLoss: return "loss-loss";
  }
  return "unknown";
}

std::optional<Kind> parse_kind(std::string_view text) {
  for (Kind kind : kAllKinds) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

bool has_gain(Kind kind) {
  return kind == Kind::GainLoss || kind == Kind::GainGain || kind == Kind::GainPassive;
}

bool uses_two_imaginary_parts(Kind kind) { return kind == Kind::GainGain || kind == Kind::LossLoss; }

void validate(const DimerRealization& r) {
  require_positive(r.coupling, "coupling g");
  require_positive(r.n_real, "n_real");
  if (uses_two_imaginary_parts(r.kind)) {
    require_positive(r.n_imag1, "n_imag1");
    require_positive(r.n_imag2, "n_imag2");
  } else {
    require_positive(r.n_imag, "n_imag");
  }
}

std::pair<Complex, Complex> waveguide_indices(const DimerRealization& r) {
  validate(r);
  const double nr = r.n_real;
  switch (r.kind) {
    case Kind::GainLoss: return {{nr, -r.n_imag}, {nr, r.n_imag}};
    case Kind::GainGain: return {{nr, -r.n_imag1}, {nr, -r.n_imag2}};
    case Kind::GainPassive: return {{nr, -r.n_imag}, {nr, 0.0}};
    case Kind::PassiveLoss: return {{nr, 0.0}, {nr, r.n_imag}};
    case Kind::LossLoss: return {{nr, r.n_imag1}, {nr, r.n_imag2}};
  }
  throw InvalidConfiguration("unknown dimer kind");
}

EffectiveParams effective_params(const DimerRealization& r) {
  validate(r);
  const double g = r.coupling;
  const double nr = r.n_real / g;
  EffectiveParams p;
  switch (r.kind) {
    case Kind::GainLoss:
      p.gamma = -r.n_imag / g;
      p.n0 = {nr, 0.0};
      break;
    case Kind::GainGain:
      p.gamma = (-r.n_imag1 + r.n_imag2) / (2.0 * g);
      p.n0 = {nr, -(r.n_imag1 + r.n_imag2) / (2.0 * g)};
      break;
    case Kind::GainPassive:
      p.gamma = -r.n_imag / (2.0 * g);
      // (n1 + n2)/2g with n1 = nR - i nI, n2 = nR.
      p.n0 = {nr, -r.n_imag / (2.0 * g)};
      break;
    case Kind::PassiveLoss:
      p.gamma = -r.n_imag / (2.0 * g);
      p.n0 = {nr, r.n_imag / (2.0 * g)};
      break;
    case Kind::LossLoss:
      p.gamma = (r.n_imag1 - r.n_imag2) / (2.0 * g);
      p.n0 = {nr, (r.n_imag1 + r.n_imag2) / (2.0 * g)};
      break;
  }
  p.n = {0.0, p.gamma};
  p.beta = -p.n0.imag();
  p.omega = dispersion(p.n);
  return p;
}

DimerRealization realization_for_gamma(Kind kind, double gamma, double n_real, double coupling) {
  if (!std::isfinite(gamma) || gamma == 0.0) throw InvalidConfiguration("gamma must be finite and nonzero");
  require_positive(n_real, "n_real");
  require_positive(coupling, "coupling g");

  DimerRealization r;
  r.kind = kind;
  r.n_real = n_real;
  r.coupling = coupling;
  const double magnitude = std::abs(gamma);
  const double weak = coupling * magnitude;
  const double strong = weak + 2.0 * coupling * magnitude;

  switch (kind) {
    case Kind::GainLoss:
    case Kind::GainPassive:
    case Kind::PassiveLoss:
      if (gamma > 0.0) {
        throw InvalidConfiguration(std::string(to_string(kind)) + " only reaches gamma < 0");
      }
      r.n_imag = kind == Kind::GainLoss ? weak : 2.0 * weak;
      break;
    case Kind::GainGain:
      // gamma = (nI2 - nI1)/2g: the stronger gain sits in the guide favoured by the sign.
      r.n_imag1 = gamma > 0.0 ? weak : strong;
      r.n_imag2 = gamma > 0.0 ? strong : weak;
      break;
    case Kind::LossLoss:
      // gamma = (nI1 - nI2)/2g.
      r.n_imag1 = gamma < 0.0 ? weak : strong;
      r.n_imag2 = gamma < 0.0 ? strong : weak;
      break;
  }
  return r;
}

}  // namespace ptdimer
