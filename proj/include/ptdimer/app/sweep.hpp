#pragma once

#include <cstddef>

#include "ptdimer/app/csv.hpp"
#include "ptdimer/app/run_spec.hpp"

namespace ptdimer::app {

struct SweepOutput {
  CsvTable table;
  std::size_t gaps = 0;
  std::string first_gap;
};

/// Evaluates the requested observable over the spec's grid. Throws on an
/// invalid spec or when any point fails to integrate; growth-limited
/// absolute values are left as gaps.
SweepOutput run_sweep(const RunSpec& spec);

/// Writes the table to spec.out, or to stdout when out is empty.
void write_sweep(const RunSpec& spec, const SweepOutput& output);

}  // namespace ptdimer::app
