#include "spectral/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spectral/analytic.hpp"
#include "spectral/error.hpp"
#include "spectral/transform.hpp"

namespace spectral {

namespace {

RealSeq checked_real_values(const Signal& signal, const char* op) {
  signal.require_uniform();
  if (!signal.is_real()) {
    throw Error(std::string(op) + " requires a real-valued signal");
  }
  return signal.real();
}

// Signed bin index: m for m <= (N-1)/2, m - N above. For even N the Nyquist
// bin is taken as -N/2, as on the centered grid.
double signed_bin(std::size_t m, std::size_t n) {
  return 2 * m < n ? static_cast<double>(m)
                   : static_cast<double>(m) - static_cast<double>(n);
}

}  // namespace

void FilterSpec::validate() const {
  if (!std::isfinite(fc)) throw Error("filter center frequency must be finite");
  if (!(bw > 0.0) || !std::isfinite(bw)) {
    throw Error("filter bandwidth must be positive");
  }
  if (n < 1) throw Error("filter degree must be at least 1");
}

double band_weight(double f, const FilterSpec& spec) {
  const double distance = std::abs(f - spec.fc);
  if (distance <= spec.bw) return 1.0;
  const double ramp = 1.0 - (distance - spec.bw) / spec.bw;
  if (ramp <= 0.0) return 0.0;
  return std::pow(ramp, spec.n);
}

Kernel Kernel::boxcar(std::size_t length) {
  if (length == 0) throw Error("kernel length must be at least 1");
  return Kernel{RealSeq(length, 1.0 / static_cast<double>(length))};
}

RealSeq convolve_fft(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("pad to equal length");
  if (a.empty()) throw Error("empty signal");
  const ComplexSeq fa = dft_forward(a);
  const ComplexSeq fb = dft_forward(b);
  const double n = static_cast<double>(a.size());
  ComplexSeq product(fa.size());
  for (std::size_t m = 0; m < product.size(); ++m) {
    product[m] = n * fa[m] * fb[m];
  }
  return real_part(dft_inverse(product));
}

RealSeq poly_multiply(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  RealSeq pa(len, 0.0);
  RealSeq pb(len, 0.0);
  std::copy(a.begin(), a.end(), pa.begin());
  std::copy(b.begin(), b.end(), pb.begin());
  return convolve_fft(pa, pb);
}

double fft_flop_estimate(std::size_t degree) {
  const double len = 2.0 * static_cast<double>(degree) + 1.0;
  return 3.0 * len * std::log2(len);
}

Signal spectral_derivative(const Signal& signal) {
  const RealSeq values = checked_real_values(signal, "spectral_derivative");
  ComplexSeq spectrum = dft_forward(values);
  const std::size_t n = spectrum.size();
  const double df = 1.0 / (signal.ts() * static_cast<double>(n));
  for (std::size_t m = 0; m < n; ++m) {
    const double f = signed_bin(m, n) * df;
    spectrum[m] *= Complex{0.0, 2.0 * std::numbers::pi * f};
  }
  return signal.with_values(real_part(dft_inverse(spectrum)));
}

Signal moving_average(const Signal& signal, const Kernel& kernel,
                      bool phase_correct) {
  const RealSeq values = checked_real_values(signal, "moving_average");
  const std::size_t n = values.size();
  const std::size_t nk = kernel.taps.size();
  if (nk == 0) throw Error("kernel length must be at least 1");
  if (nk > n) throw Error("kernel longer than signal");
  require_finite(kernel.taps);

  RealSeq padded(n, 0.0);
  std::copy(kernel.taps.begin(), kernel.taps.end(), padded.begin());
  ComplexSeq spectrum = dft_forward(values);
  const ComplexSeq k = dft_forward(padded);
  const double scale = static_cast<double>(n);  // unnormalized kernel spectrum
  const double delay = 0.5 * static_cast<double>(nk - 1);
  for (std::size_t m = 0; m < n; ++m) {
    spectrum[m] *= scale * k[m];
    if (phase_correct) {
      const double angle = 2.0 * std::numbers::pi * signed_bin(m, n) * delay /
                           static_cast<double>(n);
      spectrum[m] *= Complex{std::cos(angle), std::sin(angle)};
    }
  }
  return signal.with_values(real_part(dft_inverse(spectrum)));
}

Signal filter_fft(const Signal& signal, const FilterSpec& spec) {
  spec.validate();
  const RealSeq values = checked_real_values(signal, "filter_fft");
  ComplexSeq spectrum = analytic_spectrum(values);
  const std::size_t n = spectrum.size();
  const double df = 1.0 / (signal.ts() * static_cast<double>(n));
  for (std::size_t m = 0; m < n; ++m) {
    spectrum[m] *= band_weight(static_cast<double>(m) * df, spec);
  }
  return signal.with_values(real_part(dft_inverse(spectrum)));
}

RealSeq acf_weights(std::span<const Complex> analytic) {
  const std::size_t n = analytic.size();
  if (n < 3) throw Error("acf_denoise needs at least three samples");
  RealSeq acf(n);
  for (std::size_t m = 0; m < n; ++m) acf[m] = std::norm(analytic[m]);
  const double mean =
      std::accumulate(acf.begin(), acf.end(), 0.0) / static_cast<double>(n);
  double ss = 0.0;
  for (double v : acf) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  RealSeq w(n);
  for (std::size_t m = 0; m < n; ++m) w[m] = acf[m] < sd ? 0.0 : 1.0;
  return w;
}

Signal acf_denoise(const Signal& signal) {
  const RealSeq values = checked_real_values(signal, "acf_denoise");
  if (values.size() < 3) throw Error("acf_denoise needs at least three samples");
  ComplexSeq spectrum = analytic_spectrum(values);
  const RealSeq w = acf_weights(spectrum);
  for (std::size_t m = 0; m < spectrum.size(); ++m) spectrum[m] *= w[m];
  return signal.with_values(real_part(dft_inverse(spectrum)));
}

}  // namespace spectral
