#include "ptdimer/app/figures.hpp"

#include <fstream>

#include "ptdimer/app/run_spec.hpp"
#include "ptdimer/errors.hpp"

namespace ptdimer::app {
namespace {

constexpr const char* kSecondSuffix = "_loss_loss";

std::string regime_label(double gamma_magnitude) {
  EffectiveParams p;
  p.n = {0.0, gamma_magnitude};
  return std::string(ptdimer::to_string(classify_regime(p)));
}

}  // namespace

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::Fig2: return "fig2";
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig4: return "fig4";
    case FigureId::Fig5: return "fig5";
  }
  return "unknown";
}

std::optional<FigureId> parse_figure(std::string_view text) {
  for (FigureId id : {FigureId::Fig2, FigureId::Fig3, FigureId::Fig4, FigureId::Fig5}) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

Observable figure_observable(FigureId id) {
  switch (id) {
    case FigureId::Fig2: return Observable::Spontaneous;
    case FigureId::Fig3: return Observable::VacuumBunching;
    case FigureId::Fig4: return Observable::SinglePhoton;
    case FigureId::Fig5: return Observable::NoonBunching;
  }
  return Observable::All;
}

std::vector<std::string> figure_value_columns(FigureId id) {
  switch (id) {
    case FigureId::Fig2:
    case FigureId::Fig4: return {"share1", "share2"};
    case FigureId::Fig3: return {"q00"};
    case FigureId::Fig5: return {"q2002"};
  }
  return {};
}

std::vector<double> figure_grid(FigureId id) {
  // Vacuum-input figures exclude zeta = 0.
  if (id == FigureId::Fig2 || id == FigureId::Fig3) return linear_grid(0.02, 10.0, 500);
  return linear_grid(0.0, 10.0, 501);
}

std::vector<PanelSpec> figure_panels(FigureId id) {
  std::vector<std::vector<Kind>> rows{{Kind::GainLoss}, {Kind::GainGain}, {Kind::GainPassive}};
  if (id == FigureId::Fig4 || id == FigureId::Fig5) rows.push_back({Kind::PassiveLoss, Kind::LossLoss});

  std::vector<PanelSpec> panels;
  char letter = 'a';
  for (const auto& kinds : rows) {
    for (double gamma : kRegimeGammas) {
      PanelSpec panel;
      panel.letter = letter++;
      panel.kinds = kinds;
      panel.gamma_magnitude = gamma;
      std::string row_name;
      for (Kind kind : kinds) row_name += (row_name.empty() ? "" : "_") + std::string(ptdimer::to_string(kind));
      panel.file_name = std::string(to_string(id)) + "_" + panel.letter + "_" + row_name + "_" +
                        regime_label(gamma) + ".csv";
      panels.push_back(std::move(panel));
    }
  }
  return panels;
}

CsvTable panel_table(FigureId id, const PanelSpec& panel) {
  const std::vector<double> grid = figure_grid(id);
  const std::vector<std::string> values = figure_value_columns(id);

  CsvTable table;
  table.columns.push_back("zeta");
  std::vector<ObservableCurve> curves;
  for (std::size_t k = 0; k < panel.kinds.size(); ++k) {
    const DimerRealization realization = preset_realization(panel.kinds[k], panel.gamma_magnitude);
    table.metadata.push_back(realization_metadata(realization) + " panel=" + std::string(1, panel.letter) +
                             " observable=" + std::string(ptdimer::to_string(figure_observable(id))));
    curves.push_back(sample_curve(Dimer::from_realization(realization), figure_observable(id), grid));
    for (const auto& column : values) table.columns.push_back(k == 0 ? column : column + kSecondSuffix);
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::optional<double>> row{grid[i]};
    for (const auto& curve : curves) {
      if (curve.values[i].failed) throw QuadratureError(curve.values[i].gap);
      for (const auto& column : values) row.push_back(curve_value(curve.values[i], grid[i], column));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::filesystem::path> write_figure(FigureId id, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const PanelSpec& panel : figure_panels(id)) {
    const auto path = out_dir / panel.file_name;
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open " + path.string());
    write_csv(out, panel_table(id, panel));
    if (!out) throw InvalidArgument("failed writing " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace ptdimer::app
