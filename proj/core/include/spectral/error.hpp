#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

// Raised for every contract violation in the library (empty input, non-finite
// samples, non-uniform sampling where a grid is required, bad parameters).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spectral
