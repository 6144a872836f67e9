#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptdimer/configurations.hpp"
#include "ptdimer/observables.hpp"

namespace ptdimer::app {

/// Numeric table with `#`-prefixed metadata lines. Missing cells are written
/// as `nan`.
struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  /// Column by name; throws std::out_of_range if absent.
  std::vector<std::optional<double>> column(const std::string& name) const;
};

/// 17 significant digits, locale independent.
std::string format_number(std::optional<double> value);

void write_csv(std::ostream& out, const CsvTable& table);
std::string to_csv(const CsvTable& table);
CsvTable read_csv(std::istream& in);

/// "kind=gain-loss gamma=-0.5 beta=0 nR=1.5 g=1".
std::string realization_metadata(const DimerRealization& realization);

/// Columns emitted for an observable by the sweep command.
std::vector<std::string> sweep_columns(Observable observable);

/// Value of `column` at one curve point, if present.
std::optional<double> curve_value(const CurvePoint& point, double zeta, const std::string& column);

/// Table of `columns` drawn from the curve, one row per zeta.
CsvTable curve_table(const ObservableCurve& curve, const std::vector<std::string>& columns);

}  // namespace ptdimer::app
