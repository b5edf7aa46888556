#include "emit.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace spectral_kit {

namespace {

void append_array(std::string& out, std::span<const double> values) {
  out += '[';
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += format_number(values[k]);
  }
  out += ']';
}

// Keys are fixed identifiers; only the quotes need writing.
void append_key(std::string& out, std::string_view key) {
  out += '"';
  out += key;
  out += "\":";
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  std::array<char, 32> buf{};
  const auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 15);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), end);
}

std::string emit_table(const Table& table, Format format) {
  const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
  std::string out;
  if (format == Format::csv) {
    for (std::size_t c = 0; c < table.names.size(); ++c) {
      if (c) out += ',';
      out += table.names[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += format_number(table.columns[c][r]);
      }
      out += '\n';
    }
    return out;
  }
  out += "{\"kind\":\"" + table.kind + "\"";
  for (const auto& [key, value] : table.meta) {
    out += ',';
    append_key(out, key);
    out += format_number(value);
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out += ',';
    append_key(out, table.names[c]);
    append_array(out, table.columns[c]);
  }
  out += "}\n";
  return out;
}

std::string emit_waterfall(const spectral::WaterfallDiagram& wf, Format format) {
  const bool period = wf.axis_mode == spectral::AxisMode::period;
  std::string out;
  if (format == Format::csv) {
    out += period ? "t/period" : "t/f";
    for (double f : wf.frequencies) out += ',' + format_number(f);
    out += '\n';
    for (std::size_t c = 0; c < wf.cols(); ++c) {
      out += format_number(wf.times[c]);
      for (std::size_t r = 0; r < wf.rows(); ++r) out += ',' + format_number(wf.at(r, c));
      out += '\n';
    }
    return out;
  }
  out += "{\"kind\":\"waterfall\",\"axis\":\"";
  out += period ? "period" : "frequency";
  out += "\",";
  append_key(out, "t");
  append_array(out, wf.times);
  out += ',';
  append_key(out, period ? "period" : "f");
  append_array(out, wf.frequencies);
  out += ',';
  append_key(out, "A");
  out += '[';
  std::vector<double> line(wf.rows());
  for (std::size_t c = 0; c < wf.cols(); ++c) {
    for (std::size_t r = 0; r < wf.rows(); ++r) line[r] = wf.at(r, c);
    if (c) out += ',';
    append_array(out, line);
  }
  out += "]}\n";
  return out;
}

Table signal_table(const spectral::Signal& signal) {
  Table t{"signal", {"x", "y"}, {}, {}};
  t.columns.emplace_back(signal.positions().begin(), signal.positions().end());
  t.columns.push_back(signal.real());
  return t;
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
}

}  // namespace spectral_kit
