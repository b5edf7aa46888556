#include "spectral/noise.hpp"

#include <cmath>
#include <numbers>

#include "spectral/error.hpp"

namespace spectral {

double GaussianNoise::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianNoise::normal(double mean, double sd) {
  if (!(sd >= 0.0) || !std::isfinite(sd)) throw Error("noise sd must be finite and nonnegative");
  if (has_spare_) {
    has_spare_ = false;
    return mean + sd * spare_;
  }
  // 1 - u lies in (0, 1], so the log is finite
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return mean + sd * r * std::cos(theta);
}

RealSeq GaussianNoise::normals(std::size_t n, double mean, double sd) {
  RealSeq out(n);
  for (double& v : out) v = normal(mean, sd);
  return out;
}

}  // namespace spectral
