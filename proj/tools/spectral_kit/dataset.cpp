#include "dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spectral/error.hpp"

namespace spectral_kit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> parse_number(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size() || field.empty()) {
    return std::nullopt;
  }
  return value;
}

Dataset finish(Dataset data) {
  if (data.y.empty()) throw UsageError("input holds no samples");
  for (std::size_t k = 0; k < data.y.size(); ++k) {
    if (!std::isfinite(data.x[k]) || !std::isfinite(data.y[k])) {
      throw UsageError("input holds a non-finite value at sample " + std::to_string(k + 1));
    }
  }
  std::vector<std::size_t> order(data.x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return data.x[a] < data.x[b]; });
  Dataset sorted;
  sorted.x.reserve(order.size());
  sorted.y.reserve(order.size());
  for (std::size_t k : order) {
    if (!sorted.x.empty() && sorted.x.back() == data.x[k]) {
      std::ostringstream msg;
      msg << "input repeats position x = " << data.x[k];
      throw UsageError(msg.str());
    }
    sorted.x.push_back(data.x[k]);
    sorted.y.push_back(data.y[k]);
  }
  return sorted;
}

}  // namespace

Dataset parse_csv(const std::string& text, std::optional<double> ts) {
  Dataset data;
  std::size_t columns = 0;
  std::size_t line_no = 0;
  bool header_allowed = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(std::string_view(text).substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    std::vector<double> values;
    bool numeric = true;
    for (auto f : fields) {
      const auto v = parse_number(f);
      if (!v) {
        numeric = false;
        break;
      }
      values.push_back(*v);
    }
    if (!numeric) {
      if (header_allowed) {
        header_allowed = false;
        columns = fields.size();
        continue;
      }
      throw UsageError("malformed CSV at line " + std::to_string(line_no) +
                       ": non-numeric field");
    }
    header_allowed = false;
    if (columns == 0) columns = values.size();
    if (values.size() != columns) {
      throw UsageError("malformed CSV at line " + std::to_string(line_no) + ": expected " +
                       std::to_string(columns) + " fields, found " +
                       std::to_string(values.size()));
    }
    if (columns == 2) {
      data.x.push_back(values[0]);
      data.y.push_back(values[1]);
    } else if (columns == 1) {
      data.y.push_back(values[0]);
    } else {
      throw UsageError("CSV input must have one (y) or two (x, y) columns");
    }
  }
  if (columns == 1) {
    if (!ts) throw UsageError("single-column input needs --ts");
    data.x.resize(data.y.size());
    for (std::size_t k = 0; k < data.x.size(); ++k) data.x[k] = static_cast<double>(k) * *ts;
  } else if (ts) {
    throw UsageError("--ts applies only to single-column input and generators");
  }
  return finish(std::move(data));
}

Dataset parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("x") || !doc.contains("y") ||
      !doc["x"].is_array() || !doc["y"].is_array()) {
    throw UsageError("JSON input must be an object with arrays x and y");
  }
  Dataset data;
  try {
    data.x = doc["x"].get<spectral::RealSeq>();
    data.y = doc["y"].get<spectral::RealSeq>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError("JSON arrays x and y must hold numbers");
  }
  if (data.x.size() != data.y.size()) throw UsageError("JSON arrays x and y differ in length");
  return finish(std::move(data));
}

Dataset parse_dataset(const std::string& text, std::optional<double> ts) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    if (ts) throw UsageError("--ts applies only to single-column input and generators");
    return parse_json(text);
  }
  return parse_csv(text, ts);
}

Dataset read_dataset(const std::string& path, std::optional<double> ts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str(), ts);
}

spectral::Signal to_signal(Dataset data) {
  try {
    return spectral::Signal(std::move(data.x), std::move(data.y));
  } catch (const spectral::Error& e) {
    throw UsageError(std::string("invalid input: ") + e.what());
  }
}

}  // namespace spectral_kit
