#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptdimer/app/csv.hpp"
#include "ptdimer/configurations.hpp"
#include "ptdimer/observables.hpp"

namespace ptdimer::app {

enum class FigureId { Fig2, Fig3, Fig4, Fig5 };

std::string_view to_string(FigureId id);
std::optional<FigureId> parse_figure(std::string_view text);

/// |gamma| of the three regime columns.
inline constexpr double kRegimeGammas[3] = {0.5, 1.0, 1.2};

/// One panel: a grid row (one kind, or passive-loss together with
/// loss-loss) in one regime column.
struct PanelSpec {
  char letter = 'a';
  std::vector<Kind> kinds;
  double gamma_magnitude = 0.5;
  std::string file_name;
};

Observable figure_observable(FigureId id);

/// Columns of the panel tables. Panels holding a second realization repeat
/// the value columns with a `_loss_loss` suffix.
std::vector<std::string> figure_value_columns(FigureId id);

std::vector<double> figure_grid(FigureId id);

/// Panels in reading order: rows gain-loss, gain-gain, gain-passive (and
/// passive-loss/loss-loss for fig4 and fig5), columns |gamma| = 0.5, 1, 1.2.
std::vector<PanelSpec> figure_panels(FigureId id);

CsvTable panel_table(FigureId id, const PanelSpec& panel);

/// Writes one CSV per panel into `out_dir` (created if needed) and returns the
/// written paths.
std::vector<std::filesystem::path> write_figure(FigureId id, const std::filesystem::path& out_dir);

}  // namespace ptdimer::app
