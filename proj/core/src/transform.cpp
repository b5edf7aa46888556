#include "spectral/transform.hpp"

#include <algorithm>
#include <cmath>

#include "spectral/error.hpp"
#include "spectral/fft.hpp"

namespace spectral {

namespace {

void modulate_alternating(ComplexSeq& values) {
  for (std::size_t n = 1; n < values.size(); n += 2) values[n] = -values[n];
}

}  // namespace

ComplexSeq dft_forward(std::span<const Complex> values) {
  if (values.empty()) throw Error("empty signal");
  require_finite(values);
  ComplexSeq out(values.begin(), values.end());
  fft(out, Direction::forward);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v *= scale;
  return out;
}

ComplexSeq dft_forward(std::span<const double> values) {
  const ComplexSeq c = to_complex(values);
  return dft_forward(std::span<const Complex>(c));
}

ComplexSeq dft_inverse(std::span<const Complex> coeffs) {
  if (coeffs.empty()) throw Error("empty signal");
  require_finite(coeffs);
  ComplexSeq out(coeffs.begin(), coeffs.end());
  fft(out, Direction::inverse);
  return out;
}

RealSeq frequency_grid(std::size_t n, double ts, bool centered) {
  if (n == 0) throw Error("empty signal");
  if (!(ts > 0.0) || !std::isfinite(ts)) {
    throw Error("sampling interval must be positive");
  }
  const double df = 1.0 / (ts * static_cast<double>(n));
  const double offset = centered ? static_cast<double>(n / 2) : 0.0;
  RealSeq f(n);
  for (std::size_t m = 0; m < n; ++m) {
    f[m] = (static_cast<double>(m) - offset) * df;
  }
  return f;
}

Spectrum spec_fft(const Signal& signal, bool center) {
  signal.require_uniform();
  ComplexSeq values(signal.values().begin(), signal.values().end());
  if (center) modulate_alternating(values);

  Spectrum out;
  out.n_samples = values.size();
  out.ts = signal.ts();
  out.origin = signal.origin();
  out.centered = center;
  out.frequencies = frequency_grid(out.n_samples, out.ts, center);
  out.amplitudes = dft_forward(std::span<const Complex>(values));
  return out;
}

void validate_spectrum(const Spectrum& spectrum) {
  const std::size_t n = spectrum.n_samples;
  if (n == 0 || spectrum.amplitudes.size() != n ||
      spectrum.frequencies.size() != n) {
    throw Error("frequency grid inconsistent with n_samples");
  }
  if (!(spectrum.ts > 0.0)) throw Error("spectrum has no sampling grid");
  const RealSeq expected = frequency_grid(n, spectrum.ts, spectrum.centered);
  const double df = 1.0 / (spectrum.ts * static_cast<double>(n));
  for (std::size_t m = 0; m < n; ++m) {
    if (std::abs(spectrum.frequencies[m] - expected[m]) > 1e-9 * df) {
      throw Error("frequency grid inconsistent with n_samples");
    }
  }
}

Signal spec_ifft(const Spectrum& spectrum) {
  validate_spectrum(spectrum);
  ComplexSeq values = dft_inverse(spectrum.amplitudes);
  if (spectrum.centered) modulate_alternating(values);

  double peak = 0.0;
  double residue = 0.0;
  for (const auto& v : values) {
    peak = std::max(peak, std::abs(v));
    residue = std::max(residue, std::abs(v.imag()));
  }
  if (residue <= 1e-9 * peak) {
    return Signal::sampled(real_part(values), spectrum.ts, spectrum.origin);
  }
  return Signal::sampled(std::move(values), spectrum.ts, spectrum.origin);
}

}  // namespace spectral
