// Command-line front end: parameter sweeps, figure datasets and the
// oracle verification suite.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ptdimer/app/figures.hpp"
#include "ptdimer/app/run_spec.hpp"
#include "ptdimer/app/sweep.hpp"
#include "ptdimer/app/verify.hpp"
#include "ptdimer/errors.hpp"

namespace {

using namespace ptdimer;

int run_sweep_command(const std::string& config, const app::RunSpec& flags, const CLI::App& cmd) {
  app::RunSpec spec = config.empty() ? app::RunSpec{} : app::load_run_spec(config);
  // Flags override the config file.
  if (cmd.count("--kind")) spec.kind = flags.kind;
  if (cmd.count("--gamma")) spec.gamma_magnitude = flags.gamma_magnitude;
  if (cmd.count("--nr")) spec.n_real = flags.n_real;
  if (cmd.count("--g")) spec.coupling = flags.coupling;
  if (cmd.count("--observable")) spec.observable = flags.observable;
  if (cmd.count("--zeta-min")) spec.zeta_min = flags.zeta_min;
  if (cmd.count("--zeta-max")) spec.zeta_max = flags.zeta_max;
  if (cmd.count("--steps")) spec.zeta_steps = flags.zeta_steps;
  if (cmd.count("--out")) spec.out = flags.out;

  const app::SweepOutput output = app::run_sweep(spec);
  app::write_sweep(spec, output);
  if (output.gaps > 0) {
    std::cerr << "warning: " << output.gaps << " rows have gaps (first: " << output.first_gap << ")\n";
  }
  return 0;
}

int run_figure_command(const std::string& which, const std::string& out_dir) {
  std::vector<app::FigureId> ids;
  if (which == "all") {
    ids = {app::FigureId::Fig2, app::FigureId::Fig3, app::FigureId::Fig4, app::FigureId::Fig5};
  } else if (const auto id = app::parse_figure(which)) {
    ids = {*id};
  } else {
    std::cerr << "error: unknown figure '" << which << "' (expected fig2..fig5 or all)\n";
    return 2;
  }
  for (app::FigureId id : ids) {
    const auto files = app::write_figure(id, out_dir);
    std::cout << app::to_string(id) << ": wrote " << files.size() << " panel files to " << out_dir << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Photon propagation through linearly active two-waveguide dimers"};
  cli.require_subcommand(1);

  app::RunSpec flags;
  std::string config;
  std::string kind_text;
  std::string observable_text;
  auto* sweep = cli.add_subcommand("sweep", "Evaluate one observable over a zeta grid and emit CSV");
  sweep->add_option("--config", config, "JSON file mirroring the run spec")->check(CLI::ExistingFile);
  sweep->add_option("--kind", kind_text, "gain-loss | gain-gain | gain-passive | passive-loss | loss-loss");
  sweep->add_option("--gamma", flags.gamma_magnitude, "|gamma| of the preset realization");
  sweep->add_option("--nr", flags.n_real, "common real index");
  sweep->add_option("--g", flags.coupling, "coupling");
  sweep->add_option("--observable", observable_text, "spont | q00 | single | noon_n | q2002 | all");
  sweep->add_option("--zeta-min", flags.zeta_min, "first zeta");
  sweep->add_option("--zeta-max", flags.zeta_max, "last zeta");
  sweep->add_option("--steps", flags.zeta_steps, "number of grid points");
  sweep->add_option("--out", flags.out, "output CSV path (default stdout)");

  std::string figure_id;
  std::string figure_out = "figures";
  auto* figure = cli.add_subcommand("figure", "Write the panel datasets of one figure");
  figure->add_option("id", figure_id, "fig2 | fig3 | fig4 | fig5 | all")->required();
  figure->add_option("--out", figure_out, "output directory");

  double tolerance = 1e-7;
  auto* verify = cli.add_subcommand("verify", "Compare the analytic results against the moment oracle");
  verify->add_option("--tolerance", tolerance, "maximum allowed oracle deviation")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(cli, argc, argv);

  try {
    if (*sweep) {
      if (!kind_text.empty()) {
        const auto kind = parse_kind(kind_text);
        if (!kind) throw InvalidArgument("unknown kind '" + kind_text + "'");
        flags.kind = *kind;
      }
      if (!observable_text.empty()) {
        const auto observable = parse_observable(observable_text);
        if (!observable) throw InvalidArgument("unknown observable '" + observable_text + "'");
        flags.observable = *observable;
      }
      return run_sweep_command(config, flags, *sweep);
    }
    if (*figure) return run_figure_command(figure_id, figure_out);
    if (*verify) {
      app::VerifyOptions options;
      options.tolerance = tolerance;
      const app::VerifyReport report = app::run_verification(options);
      app::print_report(std::cout, report);
      return report.passed() ? 0 : 1;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidConfiguration& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
