#pragma once

#include <cstddef>
#include <span>

#include "spectral/signal.hpp"

namespace spectral {

// Complex signal a = s + i H(s) with a one-sided spectrum.
struct AnalyticSignal {
  RealSeq positions;
  ComplexSeq values;

  Signal to_signal() const { return Signal(positions, values); }
};

// Per-bin factors that turn a two-sided DFT of a real sequence into the
// one-sided spectrum of its analytic signal. Mirrors (1 - sign(f - 0.5)) on
// the virtual grid f = m - (N-1)/2, followed by halving the mean bin:
//   m = 0: 1,  0 < m < N/2: 2,  m = N/2 (even N): 1,  m > N/2: 0.
RealSeq analytic_weights(std::size_t n);

// Normalized (1/N) one-sided spectrum of the analytic signal of `values`.
ComplexSeq analytic_spectrum(std::span<const double> values);

// Spectral Hilbert transform before the real cast: bins 0 < m < N/2 are
// multiplied by -i, bins N/2 < m < N by +i; the mean bin and (for even N) the
// Nyquist bin are zeroed.
ComplexSeq hilbert_complex(std::span<const double> values);

// Hilbert transform of a real uniform signal (N >= 2). Real-valued output.
Signal hilbert(const Signal& signal);

// Analytic signal of a real uniform signal (N >= 2). The real part reproduces
// the input, the spectrum vanishes above the Nyquist index and bins below it
// carry twice the two-sided coefficient.
AnalyticSignal analytic_signal(const Signal& signal);

// Envelope |s + i H(s)| computed as the magnitude of analytic_signal().
// Meaningful when the carrier is well separated from the envelope bandwidth.
Signal envelope(const Signal& signal);

}  // namespace spectral
