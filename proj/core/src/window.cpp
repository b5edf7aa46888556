#include "spectral/window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectral/error.hpp"

namespace spectral {

namespace {

double quarter_cosine_ramp(double u, double alpha) {
  if (u >= alpha) return 1.0;
  const double s = std::sin(0.5 * std::numbers::pi * u / alpha);
  return s * s;
}

template <typename Coefficients>
RealSeq symmetric_window(std::size_t n, Coefficients&& coefficient) {
  if (n == 0) throw Error("window length must be at least 1");
  RealSeq w(n, 1.0);
  if (n == 1) return w;
  const double denom = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    // evaluate on the lower half and mirror so w[k] == w[n-1-k] exactly
    const std::size_t j = std::min(k, n - 1 - k);
    const double x = 2.0 * std::numbers::pi * static_cast<double>(j) / denom;
    w[k] = std::clamp(coefficient(x), 0.0, 1.0);
  }
  return w;
}

}  // namespace

RealSeq window_tukey(std::span<const double> positions, double alpha) {
  if (positions.empty()) throw Error("window positions must not be empty");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error("tukey alpha must lie in (0, 1]");
  }
  require_finite(positions);
  const auto [lo, hi] = std::minmax_element(positions.begin(), positions.end());
  const double range = *hi - *lo;
  RealSeq w(positions.size(), 1.0);
  if (range == 0.0) return w;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const double u = (positions[k] - *lo) / range;
    w[k] = std::min(quarter_cosine_ramp(u, alpha),
                    quarter_cosine_ramp(1.0 - u, alpha));
  }
  return w;
}

RealSeq window_hamming(std::size_t n) {
  return symmetric_window(n, [](double x) { return 0.54 - 0.46 * std::cos(x); });
}

RealSeq window_blackman(std::size_t n) {
  return symmetric_window(n, [](double x) {
    return 0.42 - 0.5 * std::cos(x) + 0.08 * std::cos(2.0 * x);
  });
}

}  // namespace spectral
