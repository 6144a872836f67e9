#include "ptdimer/app/sweep.hpp"

#include <fstream>
#include <iostream>

#include "ptdimer/errors.hpp"

namespace ptdimer::app {

SweepOutput run_sweep(const RunSpec& spec) {
  validate(spec);
  const DimerRealization realization = spec.realization();
  const Dimer dimer = Dimer::from_realization(realization);
  const std::vector<double> grid = linear_grid(spec.zeta_min, spec.zeta_max, spec.zeta_steps);
  const ObservableCurve curve = sample_curve(dimer, spec.observable, grid);

  SweepOutput output;
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    const CurvePoint& point = curve.values[i];
    if (point.failed) {
      throw QuadratureError("zeta = " + format_number(curve.zetas[i]) + ": " + point.gap);
    }
    if (!point.gap.empty()) {
      if (output.gaps == 0) output.first_gap = "zeta = " + format_number(curve.zetas[i]) + ": " + point.gap;
      ++output.gaps;
    }
  }
  output.table = curve_table(curve, sweep_columns(spec.observable));
  output.table.metadata.push_back(realization_metadata(realization) +
                                  " observable=" + std::string(to_string(spec.observable)));
  return output;
}

void write_sweep(const RunSpec& spec, const SweepOutput& output) {
  if (spec.out.empty()) {
    write_csv(std::cout, output.table);
    return;
  }
  std::ofstream out(spec.out);
  if (!out) throw InvalidArgument("cannot open output file " + spec.out);
  write_csv(out, output.table);
  if (!out) throw InvalidArgument("failed writing " + spec.out);
}

}  // namespace ptdimer::app
