#pragma once

#include <cstdint>
#include <random>

#include "spectral/signal.hpp"

namespace spectral {

// Gaussian noise with a portable stream: uniforms are the top 53 bits of
// std::mt19937_64 scaled by 2^-53, turned into normals by Box-Muller.
// std::normal_distribution is avoided because its output differs between
// standard library implementations.
class GaussianNoise {
 public:
  explicit GaussianNoise(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // in [0, 1)
  double normal(double mean = 0.0, double sd = 1.0);
  RealSeq normals(std::size_t n, double mean = 0.0, double sd = 1.0);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace spectral
