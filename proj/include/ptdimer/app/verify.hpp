#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ptdimer/configurations.hpp"
#include "ptdimer/dimer.hpp"

namespace ptdimer::app {

struct VerifyCase {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string worst;  // description of the worst sample
  bool passed() const { return max_deviation <= tolerance; }
};

struct VerifyReport {
  std::vector<VerifyCase> cases;
  bool passed() const;
};

struct VerifyOptions {
  /// Bound on |analytic - oracle| for the moment comparison.
  double tolerance = 1e-7;
  double oracle_step = 2.5e-4;
  /// Propagator used by the analytic side; replaced by faulty doubles in tests.
  PropagatorFn propagator = &ptdimer::propagator;
};

/// Signed gamma values reachable by `kind` among +-0.5, +-1, +-1.2.
std::vector<double> reachable_gammas(Kind kind);

/// Oracle-versus-analytic grid over every kind, reachable gamma, initial
/// state in {vacuum, |10>, |01>} and zeta in {0.5, 1, 2, 5}, plus the
/// propagator and statistics invariants. Moment deviations are compared in
/// the frame without the common factor e^{2 beta zeta}.
VerifyReport run_verification(const VerifyOptions& options = {});

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace ptdimer::app
