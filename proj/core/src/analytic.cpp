#include "spectral/analytic.hpp"

#include <cmath>

#include "spectral/error.hpp"
#include "spectral/transform.hpp"

namespace spectral {

namespace {

// Uniform, real, N >= 2.
RealSeq checked_real_values(const Signal& signal, const char* op) {
  signal.require_uniform();
  if (signal.size() < 2) {
    throw Error(std::string(op) + " needs at least two samples");
  }
  if (!signal.is_real()) {
    throw Error(std::string(op) + " requires a real-valued signal");
  }
  return signal.real();
}

}  // namespace

RealSeq analytic_weights(std::size_t n) {
  RealSeq w(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    // sign(m - N/2), evaluated in integers to stay exact
    const std::size_t twice_m = 2 * m;
    if (twice_m < n) {
      w[m] = 2.0;
    } else if (twice_m == n) {
      w[m] = 1.0;
    }
  }
  if (n > 0) w[0] = 0.5 * w[0];
  return w;
}

ComplexSeq analytic_spectrum(std::span<const double> values) {
  ComplexSeq spectrum = dft_forward(values);
  const RealSeq w = analytic_weights(spectrum.size());
  for (std::size_t m = 0; m < spectrum.size(); ++m) spectrum[m] *= w[m];
  return spectrum;
}

ComplexSeq hilbert_complex(std::span<const double> values) {
  ComplexSeq spectrum = dft_forward(values);
  const std::size_t n = spectrum.size();
  const Complex minus_i{0.0, -1.0};
  const Complex plus_i{0.0, 1.0};
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t twice_m = 2 * m;
    if (m == 0 || twice_m == n) {
      spectrum[m] = 0.0;
    } else if (twice_m < n) {
      spectrum[m] *= minus_i;
    } else {
      spectrum[m] *= plus_i;
    }
  }
  return dft_inverse(spectrum);
}

Signal hilbert(const Signal& signal) {
  const RealSeq values = checked_real_values(signal, "hilbert");
  const ComplexSeq h = hilbert_complex(values);
  return signal.with_values(real_part(h));
}

AnalyticSignal analytic_signal(const Signal& signal) {
  const RealSeq values = checked_real_values(signal, "analytic_signal");
  AnalyticSignal out;
  out.positions.assign(signal.positions().begin(), signal.positions().end());
  out.values = dft_inverse(analytic_spectrum(values));
  // The real part is the input by construction; pin it exactly.
  for (std::size_t n = 0; n < values.size(); ++n) {
    out.values[n].real(values[n]);
  }
  return out;
}

Signal envelope(const Signal& signal) {
  const AnalyticSignal a = analytic_signal(signal);
  RealSeq magnitude(a.values.size());
  for (std::size_t n = 0; n < magnitude.size(); ++n) {
    magnitude[n] = std::abs(a.values[n]);
  }
  return signal.with_values(std::move(magnitude));
}

}  // namespace spectral
