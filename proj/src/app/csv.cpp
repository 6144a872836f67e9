#include "ptdimer/app/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ptdimer/errors.hpp"

namespace ptdimer::app {

std::vector<std::optional<double>> CsvTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column '" + name + "'");
  const auto index = static_cast<std::size_t>(it - columns.begin());
  std::vector<std::optional<double>> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(row.at(index));
  return values;
}

std::string format_number(std::optional<double> value) {
  if (!value || !std::isfinite(*value)) return "nan";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, *value, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer, end);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& line : table.metadata) out << "# " << line << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
    out << '\n';
  }
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.metadata.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (!header) {
      table.columns = cells;
      header = true;
      continue;
    }
    if (cells.size() != table.columns.size()) throw InvalidArgument("ragged CSV row: " + line);
    std::vector<std::optional<double>> row;
    for (const auto& text : cells) {
      if (text == "nan") {
        row.emplace_back();
        continue;
      }
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) throw InvalidArgument("bad CSV number: " + text);
      row.emplace_back(value);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string realization_metadata(const DimerRealization& r) {
  const EffectiveParams p = effective_params(r);
  std::string text = "kind=" + std::string(to_string(r.kind)) + " gamma=" + format_number(p.gamma) +
                     " beta=" + format_number(p.beta + 0.0) + " nR=" + format_number(r.n_real) +
                     " g=" + format_number(r.coupling);
  if (uses_two_imaginary_parts(r.kind)) {
    text += " nI1=" + format_number(r.n_imag1) + " nI2=" + format_number(r.n_imag2);
  } else {
    text += " nI=" + format_number(r.n_imag);
  }
  return text;
}

std::vector<std::string> sweep_columns(Observable observable) {
  switch (observable) {
    case Observable::Spontaneous:
    case Observable::SinglePhoton:
    case Observable::NoonNumbers: return {"zeta", "n1", "n2", "share1", "share2"};
    case Observable::VacuumBunching: return {"zeta", "n1", "n2", "n12_re", "n12_im", "q00"};
    case Observable::NoonBunching: return {"zeta", "n1", "n2", "q2002"};
    case Observable::All: return {"zeta", "n1", "n2", "share1", "share2", "n12_re", "n12_im", "q00", "q2002"};
  }
  return {};
}

std::optional<double> curve_value(const CurvePoint& p, double zeta, const std::string& column) {
  if (column == "zeta") return zeta;
  if (column == "n1") return p.numbers ? std::optional(p.numbers->n1) : std::nullopt;
  if (column == "n2") return p.numbers ? std::optional(p.numbers->n2) : std::nullopt;
  if (column == "share1") return p.shares ? std::optional(p.shares->share1) : std::nullopt;
  if (column == "share2") return p.shares ? std::optional(p.shares->share2) : std::nullopt;
  if (column == "n12_re") return p.n12 ? std::optional(p.n12->real()) : std::nullopt;
  if (column == "n12_im") return p.n12 ? std::optional(p.n12->imag()) : std::nullopt;
  if (column == "q00") return p.q00;
  if (column == "q2002") return p.q2002;
  throw InvalidArgument("unknown column '" + column + "'");
}

CsvTable curve_table(const ObservableCurve& curve, const std::vector<std::string>& columns) {
  CsvTable table;
  table.columns = columns;
  table.rows.reserve(curve.zetas.size());
  for (std::size_t i = 0; i < curve.zetas.size(); ++i) {
    std::vector<std::optional<double>> row;
    row.reserve(columns.size());
    for (const auto& column : columns) row.push_back(curve_value(curve.values[i], curve.zetas[i], column));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace ptdimer::app
