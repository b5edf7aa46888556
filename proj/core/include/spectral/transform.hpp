#pragma once

#include <cstddef>
#include <span>

#include "spectral/signal.hpp"

namespace spectral {

// Forward DFT with the 1/N normalization on the forward side:
//
//   S[m] = (1/N) sum_{n=0}^{N-1} s[n] e^{-i 2 pi m n / N}
//
// so S[0] is the arithmetic mean of the input. Note this differs from the
// common unnormalized convention (FFTW, numpy).
// Throws "empty signal" for N = 0 and "non-finite sample" for NaN/Inf input.
ComplexSeq dft_forward(std::span<const Complex> values);
ComplexSeq dft_forward(std::span<const double> values);

// Back transform matching dft_forward (no 1/N):
//
//   s[n] = sum_{m=0}^{N-1} S[m] e^{+i 2 pi m n / N}
ComplexSeq dft_inverse(std::span<const Complex> coeffs);

// Frequencies of the N bins for sampling interval ts.
//   centered = false: m / (ts N),             m = 0 .. N-1
//   centered = true:  (m - floor(N/2)) / (ts N), m = 0 .. N-1
RealSeq frequency_grid(std::size_t n, double ts, bool centered);

// DFT of a uniformly sampled signal together with its frequency grid. With
// center = true the samples are modulated by (-1)^n first, which moves f = 0
// to index floor(N/2) and puts negative frequencies to its left.
Spectrum spec_fft(const Signal& signal, bool center);

// Inverse of spec_fft, undoing the (-1)^n modulation for centered spectra.
// The result is real when the imaginary residue is at most 1e-9 * max|value|,
// otherwise the complex values are kept.
// Throws when the frequency grid does not match (n_samples, ts, centered).
void validate_spectrum(const Spectrum& spectrum);
Signal spec_ifft(const Spectrum& spectrum);

}  // namespace spectral
