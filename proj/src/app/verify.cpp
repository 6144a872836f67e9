#include "ptdimer/app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "ptdimer/moment_oracle.hpp"
#include "ptdimer/observables.hpp"

namespace ptdimer::app {
namespace {

constexpr double kOracleZetas[] = {0.5, 1.0, 2.0, 5.0};

struct InitialState {
  const char* label;
  MomentState state;
};

void track(VerifyCase& c, double deviation, const std::string& where) {
  if (!(deviation <= c.max_deviation) || std::isnan(deviation)) {
    if (std::isnan(deviation)) deviation = std::numeric_limits<double>::infinity();
    c.max_deviation = deviation;
    c.worst = where;
  }
}

std::string describe(Kind kind, double gamma) {
  std::ostringstream s;
  s << to_string(kind) << " gamma=" << gamma;
  return s.str();
}

VerifyCase oracle_case(const VerifyOptions& options) {
  VerifyCase c{"oracle moments vs analytic (e^{-2 beta zeta} frame)", 0.0, options.tolerance, ""};
  const InitialState states[] = {{"|00>", MomentState::vacuum()},
                                 {"|10>", MomentState::fock(1.0, 0.0)},
                                 {"|01>", MomentState::fock(0.0, 1.0)}};
  EvalOptions eval;
  eval.growth_limit = std::numeric_limits<double>::infinity();
  eval.propagator = options.propagator;

  for (Kind kind : kAllKinds) {
    for (double gamma : reachable_gammas(kind)) {
      const DimerRealization r = realization_for_gamma(kind, gamma, 1.5, 1.0);
      const Dimer dimer = Dimer::from_realization(r);
      const auto [n1, n2] = waveguide_indices(r);
      const DriftAndPump dp = DriftAndPump::from_indices(n1, n2, r.coupling);
      for (const auto& initial : states) {
        const auto trajectory = integrate_moments(initial.state, dp, kOracleZetas, options.oracle_step);
        for (std::size_t i = 0; i < std::size(kOracleZetas); ++i) {
          const double zeta = kOracleZetas[i];
          const Matrix2c analytic = mean_photon_moments(dimer, initial.state.moments, zeta, eval);
          const Matrix2c& oracle = trajectory[i].moments;
          const double frame = std::exp(-2.0 * dimer.params().beta * zeta);
          const double deviation = frame * std::max({std::abs(analytic.m11 - oracle.m11),
                                                     std::abs(analytic.m22 - oracle.m22),
                                                     std::abs(analytic.m12 - oracle.m12)});
          std::ostringstream where;
          where << describe(kind, gamma) << " state=" << initial.label << " zeta=" << zeta;
          track(c, deviation, where.str());
        }
      }
    }
  }
  return c;
}

VerifyCase propagator_case(const VerifyOptions& options) {
  VerifyCase c{"propagator det = 1 and semigroup (relative to |U|^2)", 0.0, 1e-10, ""};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double radius = 2.0 * std::sqrt(unit(rng));
    const double angle = 2.0 * M_PI * unit(rng);
    const Complex n = std::polar(radius, angle);
    const double z1 = 5.0 * unit(rng);
    const double z2 = 5.0 * unit(rng);
    const Matrix2c u1 = options.propagator(n, z1);
    const Matrix2c u2 = options.propagator(n, z2);
    const Matrix2c u12 = options.propagator(n, z1 + z2);
    const double scale_det = std::max(1.0, max_abs(u12) * max_abs(u12));
    const double scale_prod = std::max(1.0, max_abs(u1) * max_abs(u2));
    std::ostringstream where;
    where << "n=" << n << " zeta1=" << z1 << " zeta2=" << z2;
    track(c, std::abs(det(u12) - 1.0) / scale_det, where.str());
    track(c, max_abs(u12 - u1 * u2) / scale_prod, where.str());
  }
  return c;
}

VerifyCase unitarity_case(const VerifyOptions& options) {
  VerifyCase c{"propagator unitary for real n", 0.0, 1e-12, ""};
  for (double n : {-1.5, -0.3, 0.0, 0.7, 2.0}) {
    for (double zeta : {0.1, 1.0, 3.7, 10.0}) {
      const Matrix2c u = options.propagator(n, zeta);
      std::ostringstream where;
      where << "n=" << n << " zeta=" << zeta;
      track(c, max_abs(adjoint(u) * u - Matrix2c::identity()), where.str());
    }
  }
  return c;
}

VerifyCase kato_case(const VerifyOptions& options) {
  VerifyCase c{"continuity at the exceptional point", 0.0, 1e-4, ""};
  for (double gamma : {1.0 - 1e-6, 1.0 + 1e-6}) {
    for (double zeta = 0.0; zeta <= 5.0; zeta += 0.25) {
      const Matrix2c exact = Matrix2c::identity() + Complex(0.0, zeta) * hamiltonian({0.0, 1.0});
      std::ostringstream where;
      where << "gamma=" << gamma << " zeta=" << zeta;
      track(c, max_abs(options.propagator({0.0, gamma}, zeta) - exact), where.str());
    }
  }
  return c;
}

VerifyCase statistics_case(const VerifyOptions& options) {
  VerifyCase c{"q2002(0) = -1, q00 >= 0, passive q2002 <= 0, |n12|^2 <= n1 n2", 0.0, 1e-9, ""};
  EvalOptions eval;
  eval.propagator = options.propagator;
  eval.growth_limit = std::numeric_limits<double>::infinity();
  for (Kind kind : kAllKinds) {
    for (double gamma : reachable_gammas(kind)) {
      const Dimer dimer = Dimer::from_realization(realization_for_gamma(kind, gamma, 1.5, 1.0));
      const std::string name = describe(kind, gamma);
      track(c, std::abs(q_noon(dimer, 0.0, eval) + 1.0), name + " zeta=0");
      for (double zeta = 0.25; zeta <= 6.0; zeta += 0.25) {
        const std::string where = name + " zeta=" + std::to_string(zeta);
        if (has_gain(kind)) {
          const VacuumMoments v = spontaneous_generation(dimer, zeta, eval);
          track(c, std::max(0.0, -q_vacuum(dimer, zeta, eval)), where);
          track(c, std::max(0.0, std::norm(v.n12) - v.n1 * v.n2) / std::max(1.0, v.n1 * v.n2), where);
        } else {
          track(c, std::max(0.0, q_noon(dimer, zeta, eval)), where);
        }
      }
    }
  }
  return c;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.passed(); });
}

std::vector<double> reachable_gammas(Kind kind) {
  std::vector<double> gammas;
  for (double magnitude : {0.5, 1.0, 1.2}) {
    gammas.push_back(-magnitude);
    if (kind == Kind::GainGain || kind == Kind::LossLoss) gammas.push_back(magnitude);
  }
  return gammas;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.cases.push_back(oracle_case(options));
  report.cases.push_back(propagator_case(options));
  report.cases.push_back(unitarity_case(options));
  report.cases.push_back(kato_case(options));
  report.cases.push_back(statistics_case(options));
  return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& c : report.cases) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << ": max deviation " << std::setprecision(3)
        << std::scientific << c.max_deviation << " (tolerance " << c.tolerance << ")" << std::defaultfloat;
    if (!c.passed()) out << " worst case: " << c.worst;
    out << '\n';
  }
  out << (report.passed() ? "verification passed" : "verification FAILED") << '\n';
}

}  // namespace ptdimer::app
