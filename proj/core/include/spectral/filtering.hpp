#pragma once

#include <cstddef>
#include <span>

#include "spectral/signal.hpp"

namespace spectral {

// Band-pass description for filter_fft and the waterfall.
//
// `bw` is the half-width of the flat pass region: weight 1 for
// |f - fc| <= bw. Outside it the weight falls as (1 - (|f - fc| - bw) / bw)^n
// and is 0 from |f - fc| >= 2 bw on. Larger n approaches a brick wall.
struct FilterSpec {
  double fc = 0.0;
  double bw = 1.0;
  int n = 3;

  void validate() const;
};

double band_weight(double f, const FilterSpec& spec);

// Time-domain filter kernel; applied circularly after zero padding.
struct Kernel {
  RealSeq taps;

  static Kernel boxcar(std::size_t length);
};

// Circular convolution through the spectral domain. Both inputs must have the
// same length (callers zero-pad, see poly_multiply).
RealSeq convolve_fft(std::span<const double> a, std::span<const double> b);

// Product of two polynomials given by ascending coefficients. Both are
// zero-padded to the result length before convolve_fft.
RealSeq poly_multiply(std::span<const double> a, std::span<const double> b);

// Flop model for the FFT route of a degree-n polynomial product:
// 3 (2n + 1) log2(2n + 1), three transforms of length 2n + 1.
double fft_flop_estimate(std::size_t degree);

// Derivative through the spectral domain: amplitudes multiplied by i 2 pi f on
// the signed frequency grid, back transform, real part. Inputs that are not
// periodic over the window must be tapered first (window_tukey).
Signal spectral_derivative(const Signal& signal);

// Moving average as a circular convolution with the zero-padded kernel.
// With phase_correct the delay of the kernel, (N_K - 1) / 2 samples, is undone
// by a linear phase factor, so a symmetric kernel does not shift the signal.
// Without it the result is y[n] = sum_j k[j] s[n - j] (indices mod N).
Signal moving_average(const Signal& signal, const Kernel& kernel,
                      bool phase_correct);

// Band-pass (or low-pass for fc = 0) filter applied to the one-sided analytic
// spectrum. Returns the real part of the back transform.
Signal filter_fft(const Signal& signal, const FilterSpec& spec);

// Keeps the spectral components whose autocorrelation spectrum |S_m|^2 is at
// least the sample standard deviation of all |S_m|^2 (analytic spectrum,
// mean bin included) and drops the rest.
Signal acf_denoise(const Signal& signal);

// Weight vector W_m used by acf_denoise for the given analytic spectrum.
RealSeq acf_weights(std::span<const Complex> analytic);

}  // namespace spectral
