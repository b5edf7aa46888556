#pragma once

// The worked example signals, reproducible by id. Stochastic examples take
// an explicit seed; there is no wall-clock entropy anywhere.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectral/signal.hpp"

namespace spectral {

struct ExampleParams {
  std::optional<double> ts;            // sampling interval where applicable
  std::optional<std::uint64_t> seed;   // mandatory for stochastic examples
  std::optional<double> sigma;         // noise standard deviation
};

struct ExampleInfo {
  std::string_view id;
  std::string_view description;
  bool stochastic = false;
};

const std::vector<ExampleInfo>& example_catalog();

// Throws Error for an unknown id (listing the known ids), a missing seed on
// a stochastic example, or out-of-range parameters.
Signal make_example(std::string_view id, const ExampleParams& params = {});

// Closed-form components used to judge the examples.
double eq21_value(double t);
double two_burst_envelope(double t, int burst);  // burst 1 or 2
double chirp_mix_value(double t);

}  // namespace spectral
