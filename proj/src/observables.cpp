#include "ptdimer/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ptdimer/errors.hpp"

namespace ptdimer {
namespace {

void require_zeta(double zeta) {
  if (!std::isfinite(zeta) || zeta < 0.0) throw InvalidArgument("zeta must be finite and non-negative");
}

EvalOptions unguarded(EvalOptions options) {
  options.growth_limit = std::numeric_limits<double>::infinity();
  return options;
}

void check_growth(const Dimer& dimer, double zeta, const EvalOptions& options) {
  const double envelope = growth_envelope(dimer.params(), zeta);
  if (envelope > options.growth_limit) {
    throw GrowthLimitExceeded("predicted magnitude " + std::to_string(envelope) + " at zeta = " +
                              std::to_string(zeta) + " exceeds the growth limit");
  }
}

template <typename T>
T require_representable(T value) {
  if constexpr (std::is_same_v<T, double>) {
    if (!std::isfinite(value)) throw GrowthLimitExceeded("value is not representable");
  } else {
    for (double v : {value.n1, value.n2}) {
      if (!std::isfinite(v)) throw GrowthLimitExceeded("value is not representable");
    }
  }
  return value;
}

// Everything the photon-number formulas need at one zeta.
struct PointState {
  VacuumMoments vacuum;
  Matrix2c u;
  double stimulated = 1.0;  // e^{2 beta zeta}
};

VacuumMoments integrate_vacuum(const Dimer& dimer, double zeta, const EvalOptions& options) {
  const PumpWeights& pump = dimer.pump();
  if (!pump.active() || zeta == 0.0) return {};

  const Complex n = dimer.params().n;
  const PropagatorFn u_of = options.propagator;
  auto integrand = [&](double t) {
    const Matrix2c u = u_of(n, t);
    const double weight = std::exp(pump.rate * t);
    const double w1 = pump.guide1 * weight;
    const double w2 = pump.guide2 * weight;
    const Complex cross = w1 * std::conj(u.m11) * u.m21 + w2 * std::conj(u.m12) * u.m22;
    return std::array<double, 4>{w1 * std::norm(u.m11) + w2 * std::norm(u.m12),
                                 w1 * std::norm(u.m21) + w2 * std::norm(u.m22), cross.real(), cross.imag()};
  };

  QuadratureOptions quadrature = options.quadrature;
  const double frequency = 1.0 + std::abs(dimer.params().omega) + 0.5 * std::abs(pump.rate);
  quadrature.initial_panels =
      std::max(quadrature.initial_panels, static_cast<std::size_t>(std::ceil(0.5 * zeta * frequency)));
  const auto result = integrate<4>(integrand, 0.0, zeta, quadrature);
  return {result.value[0], result.value[1], {result.value[2], result.value[3]}};
}

PointState evaluate_point(const Dimer& dimer, double zeta, const EvalOptions& options) {
  require_zeta(zeta);
  PointState state;
  state.vacuum = integrate_vacuum(dimer, zeta, options);
  state.u = options.propagator(dimer.params().n, zeta);
  state.stimulated = std::exp(2.0 * dimer.params().beta * zeta);
  return state;
}

PhotonNumbers single_from(const PointState& s) {
  return {s.stimulated * std::norm(s.u.m11) + s.vacuum.n1, s.stimulated * std::norm(s.u.m21) + s.vacuum.n2};
}

PhotonNumbers noon_from(const PointState& s) {
  return {s.stimulated * (std::norm(s.u.m11) + std::norm(s.u.m12)) + s.vacuum.n1,
          s.stimulated * (std::norm(s.u.m21) + std::norm(s.u.m22)) + s.vacuum.n2};
}

double two_point_from(const PointState& s) {
  const Matrix2c& u = s.u;
  const VacuumMoments& v = s.vacuum;
  const double e2 = s.stimulated;
  const double row1 = std::norm(u.m11) + std::norm(u.m12);
  const double row2 = std::norm(u.m21) + std::norm(u.m22);
  const Complex overlap = std::conj(u.m21) * u.m11 + std::conj(u.m22) * u.m12;
  return e2 * e2 * std::norm(u.m11 * u.m21 + u.m12 * u.m22) + v.n1 * v.n2 + std::norm(v.n12) +
         e2 * (v.n1 * row2 + v.n2 * row1) + 2.0 * e2 * (v.n12 * overlap).real();
}

double q_noon_from(const PointState& s) {
  const PhotonNumbers numbers = noon_from(s);
  const double denominator = numbers.n1 * numbers.n2;
  if (!(denominator > 0.0)) {
    throw UndefinedObservable("N00N photon numbers vanished; two-point statistics are indeterminate");
  }
  return require_representable(two_point_from(s) / denominator - 1.0);
}

double q_vacuum_from(const Dimer& dimer, const VacuumMoments& v, double zeta) {
  if (!dimer.pump().active() || zeta == 0.0) {
    throw UndefinedObservable("no spontaneous field: q(00) is 0/0");
  }
  const double denominator = v.n1 * v.n2;
  if (!(denominator > 0.0)) throw UndefinedObservable("no spontaneous field: q(00) is 0/0");
  return require_representable(std::norm(v.n12) / denominator);
}

}  // namespace

PumpWeights pump_weights(Kind kind, const EffectiveParams& p) {
  switch (kind) {
    case Kind::GainLoss: return {-2.0 * p.gamma, 0.0, 0.0};
    case Kind::GainGain: return {2.0 * (p.beta - p.gamma), 2.0 * (p.beta + p.gamma), 2.0 * p.beta};
    case Kind::GainPassive: return {-4.0 * p.gamma, 0.0, -2.0 * p.gamma};
    case Kind::PassiveLoss:
    case Kind::LossLoss: return {};
  }
  return {};
}

Dimer Dimer::from_realization(const DimerRealization& realization) {
  return from_params(realization.kind, effective_params(realization));
}

Dimer Dimer::from_params(Kind kind, const EffectiveParams& params) {
  return Dimer(kind, params, pump_weights(kind, params));
}

Dimer Dimer::from_indices(Complex n1, Complex n2, double g) {
  const EffectiveParams params = effective_params_from_indices(n1, n2, g);
  const PumpWeights pump{2.0 * std::max(0.0, -n1.imag()) / g, 2.0 * std::max(0.0, -n2.imag()) / g,
                         2.0 * params.beta};
  return Dimer(std::nullopt, params, pump);
}

double growth_envelope(const EffectiveParams& params, double zeta) {
  return std::exp(2.0 * (std::max(params.beta, 0.0) + std::abs(params.omega.imag())) * zeta);
}

VacuumMoments spontaneous_generation(const Dimer& dimer, double zeta, const EvalOptions& options) {
  require_zeta(zeta);
  check_growth(dimer, zeta, options);
  return integrate_vacuum(dimer, zeta, options);
}

Complex cross_correlation_vacuum(const Dimer& dimer, double zeta, const EvalOptions& options) {
  return spontaneous_generation(dimer, zeta, options).n12;
}

double q_vacuum(const Dimer& dimer, double zeta, const EvalOptions& options) {
  require_zeta(zeta);
  if (!dimer.pump().active() || zeta == 0.0) {
    throw UndefinedObservable("no spontaneous field: q(00) is 0/0");
  }
  return q_vacuum_from(dimer, integrate_vacuum(dimer, zeta, unguarded(options)), zeta);
}

double g2_vacuum(const Dimer& dimer, double zeta, const EvalOptions& options) {
  return 1.0 + q_vacuum(dimer, zeta, options);
}

Matrix2c mean_photon_moments(const Dimer& dimer, const Matrix2c& initial, double zeta,
                             const EvalOptions& options) {
  require_zeta(zeta);
  check_growth(dimer, zeta, options);
  const PointState s = evaluate_point(dimer, zeta, options);
  Matrix2c moments = s.stimulated * (conj(s.u) * initial * transpose(s.u));
  moments += Matrix2c{s.vacuum.n1, s.vacuum.n12, std::conj(s.vacuum.n12), s.vacuum.n2};
  return moments;
}

PhotonNumbers single_photon_numbers(const Dimer& dimer, double zeta, const EvalOptions& options) {
  require_zeta(zeta);
  check_growth(dimer, zeta, options);
  return single_from(evaluate_point(dimer, zeta, options));
}

PhotonNumbers noon_photon_numbers(const Dimer& dimer, double zeta, const EvalOptions& options) {
  require_zeta(zeta);
  check_growth(dimer, zeta, options);
  return noon_from(evaluate_point(dimer, zeta, options));
}

double noon_two_point(const Dimer& dimer, double zeta, const EvalOptions& options) {
  require_zeta(zeta);
  check_growth(dimer, zeta, options);
  return two_point_from(evaluate_point(dimer, zeta, options));
}

double q_noon(const Dimer& dimer, double zeta, const EvalOptions& options) {
  return q_noon_from(evaluate_point(dimer, zeta, unguarded(options)));
}

Shares renormalize(const PhotonNumbers& numbers) {
  if (!(numbers.n1 >= 0.0) || !(numbers.n2 >= 0.0)) {
    throw UndefinedObservable("photon numbers must be non-negative to renormalize");
  }
  const double total = numbers.n1 + numbers.n2;
  if (!(total > 0.0)) throw UndefinedObservable("renormalization of a vanishing field is undefined");
  if (!std::isfinite(total)) throw GrowthLimitExceeded("photon numbers are not representable");
  const double share1 = numbers.n1 / total;
  return {share1, 1.0 - share1};
}

Shares spontaneous_shares(const Dimer& dimer, double zeta, const EvalOptions& options) {
  require_zeta(zeta);
  const VacuumMoments v = integrate_vacuum(dimer, zeta, unguarded(options));
  return renormalize({v.n1, v.n2});
}

Shares single_photon_shares(const Dimer& dimer, double zeta, const EvalOptions& options) {
  return renormalize(single_from(evaluate_point(dimer, zeta, unguarded(options))));
}

Shares asymptotic_shares(double gamma) {
  if (!std::isfinite(gamma)) throw InvalidArgument("gamma must be finite");
  if (std::abs(gamma) < 1.0 - 1e-12) {
    throw UndefinedObservable("no asymptotic shares inside the PT-symmetric regime (|gamma| < 1)");
  }
  const double root = std::sqrt(std::max(gamma * gamma - 1.0, 0.0));
  const double lead = gamma + root;
  return {1.0 / (2.0 * gamma * lead), lead / (2.0 * gamma)};
}

std::string_view to_string(Observable observable) {
  switch (observable) {
    case Observable::Spontaneous: return "spont";
    case Observable::VacuumBunching: return "q00";
    case Observable::SinglePhoton: return "single";
    case Observable::NoonNumbers: return "noon_n";
    case Observable::NoonBunching: return "q2002";
    case Observable::All: return "all";
  }
  return "unknown";
}

std::optional<Observable> parse_observable(std::string_view text) {
  for (Observable o : {Observable::Spontaneous, Observable::VacuumBunching, Observable::SinglePhoton,
                       Observable::NoonNumbers, Observable::NoonBunching, Observable::All}) {
    if (text == to_string(o)) return o;
  }
  return std::nullopt;
}

bool requires_positive_zeta(Observable observable) {
  return observable == Observable::Spontaneous || observable == Observable::VacuumBunching ||
         observable == Observable::All;
}

std::size_t ObservableCurve::gap_count() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](const CurvePoint& p) { return !p.gap.empty(); }));
}

ObservableCurve sample_curve(const Dimer& dimer, Observable observable, std::span<const double> zetas,
                             const EvalOptions& options) {
  for (std::size_t i = 0; i < zetas.size(); ++i) {
    require_zeta(zetas[i]);
    if (i > 0 && !(zetas[i] > zetas[i - 1])) throw InvalidArgument("zeta grid must be strictly increasing");
  }

  ObservableCurve curve;
  curve.zetas.assign(zetas.begin(), zetas.end());
  curve.values.reserve(zetas.size());
  const EvalOptions free = unguarded(options);

  for (double zeta : zetas) {
    CurvePoint point;
    auto note = [&point](const std::string& why) {
      if (point.gap.empty()) point.gap = why;
    };
    try {
      const PointState s = evaluate_point(dimer, zeta, free);
      const bool within_limit = growth_envelope(dimer.params(), zeta) <= options.growth_limit;
      auto absolute = [&](auto value) {
        if (within_limit) return std::optional(value);
        note("growth limit exceeded");
        return std::optional<decltype(value)>{};
      };
      auto ratio = [&](auto&& compute) -> std::optional<std::invoke_result_t<decltype(compute)>> {
        try {
          return compute();
        } catch (const UndefinedObservable& e) {
          note(e.what());
        } catch (const GrowthLimitExceeded& e) {
          note(e.what());
        }
        return std::nullopt;
      };
      const PhotonNumbers vacuum_numbers{s.vacuum.n1, s.vacuum.n2};

      switch (observable) {
        case Observable::Spontaneous:
          point.numbers = absolute(vacuum_numbers);
          point.shares = ratio([&] { return renormalize(vacuum_numbers); });
          break;
        case Observable::VacuumBunching:
          point.numbers = absolute(vacuum_numbers);
          point.n12 = absolute(s.vacuum.n12);
          point.q00 = ratio([&] { return q_vacuum_from(dimer, s.vacuum, zeta); });
          break;
        case Observable::SinglePhoton:
          point.numbers = absolute(single_from(s));
          point.shares = ratio([&] { return renormalize(single_from(s)); });
          break;
        case Observable::NoonNumbers:
          point.numbers = absolute(noon_from(s));
          point.shares = ratio([&] { return renormalize(noon_from(s)); });
          break;
        case Observable::NoonBunching:
          point.numbers = absolute(noon_from(s));
          point.q2002 = ratio([&] { return q_noon_from(s); });
          break;
        case Observable::All:
          point.numbers = absolute(vacuum_numbers);
          point.n12 = absolute(s.vacuum.n12);
          point.shares = ratio([&] { return renormalize(vacuum_numbers); });
          point.q00 = ratio([&] { return q_vacuum_from(dimer, s.vacuum, zeta); });
          point.q2002 = ratio([&] { return q_noon_from(s); });
          break;
      }
    } catch (const QuadratureError& e) {
      note(e.what());
      point.failed = true;
    }
    curve.values.push_back(std::move(point));
  }
  return curve;
}

std::vector<double> linear_grid(double zeta_min, double zeta_max, std::size_t steps) {
  if (steps < 2) throw InvalidArgument("a grid needs at least two points");
  if (!std::isfinite(zeta_min) || !std::isfinite(zeta_max) || !(zeta_max > zeta_min)) {
    throw InvalidArgument("grid bounds must be finite with zeta_max > zeta_min");
  }
  std::vector<double> grid(steps);
  const double step = (zeta_max - zeta_min) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) grid[i] = zeta_min + step * static_cast<double>(i);
  grid.back() = zeta_max;
  return grid;
}

}  // namespace ptdimer
