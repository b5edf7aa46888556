#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "spectral/signal.hpp"

namespace spectral_kit {

// Bad arguments or bad input data; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Two columns x, y (optional header), or one column y with a sampling
// interval. Rows are sorted by x on load; repeated positions are rejected.
struct Dataset {
  spectral::RealSeq x;
  spectral::RealSeq y;
};

Dataset parse_csv(const std::string& text, std::optional<double> ts);
// {"x": [...], "y": [...]} as written by the signal emitter.
Dataset parse_json(const std::string& text);
// Dispatches on content: a leading '{' selects JSON, anything else CSV.
Dataset parse_dataset(const std::string& text, std::optional<double> ts);
Dataset read_dataset(const std::string& path, std::optional<double> ts);

spectral::Signal to_signal(Dataset data);

}  // namespace spectral_kit
