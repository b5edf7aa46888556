#include "spectral/qdt.hpp"

#include <cmath>

#include "spectral/error.hpp"

namespace spectral {

QdtResult qdt_demodulate(const Signal& signal, double omega0) {
  signal.require_uniform();
  if (signal.size() < 2) throw Error("qdt needs at least two samples");
  if (!std::isfinite(omega0)) throw Error("non-finite frequency");

  const auto t = signal.positions();
  const auto s = signal.values();
  double r = 0.0;
  double i = 0.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    r += s[n].real() * std::cos(omega0 * t[n]);
    i += s[n].real() * std::sin(omega0 * t[n]);
  }
  const double inv_n = 1.0 / static_cast<double>(s.size());
  r *= inv_n;
  i *= inv_n;
  return {2.0 * std::hypot(r, i), std::atan2(i, r)};
}

}  // namespace spectral
