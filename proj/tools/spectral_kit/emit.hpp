#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectral/signal.hpp"
#include "spectral/waterfall.hpp"

namespace spectral_kit {

enum class Format { csv, json };

// A result with named, equal-length columns plus optional scalar metadata
// (JSON only).
struct Table {
  std::string kind;
  std::vector<std::string> names;
  std::vector<spectral::RealSeq> columns;
  std::vector<std::pair<std::string, double>> meta;
};

// Shortest text of v with at most 15 significant digits; -0 prints as 0.
std::string format_number(double v);

std::string emit_table(const Table& table, Format format);
// CSV: first row is the frequency (or period) axis, first column the time
// axis. JSON: axis arrays plus amplitude rows, one row per time sample.
std::string emit_waterfall(const spectral::WaterfallDiagram& wf, Format format);

Table signal_table(const spectral::Signal& signal);

// Writes to the path, or standard output for "" and "-".
void write_output(const std::string& path, const std::string& bytes);

}  // namespace spectral_kit
