#pragma once

#include <cstddef>
#include <span>

#include "spectral/filtering.hpp"
#include "spectral/signal.hpp"

namespace spectral {

enum class AxisMode { frequency, period };

// Time-frequency amplitude map. Row r belongs to axis()[r] (a frequency or,
// after to_period_axis, a period); column c to times[c]. Row-major storage.
struct WaterfallDiagram {
  RealSeq times;
  RealSeq frequencies;  // holds periods when axis_mode == period
  RealSeq amplitudes;   // rows() * cols()
  AxisMode axis_mode = AxisMode::frequency;

  std::size_t rows() const { return frequencies.size(); }
  std::size_t cols() const { return times.size(); }
  double at(std::size_t row, std::size_t col) const {
    return amplitudes[row * cols() + col];
  }
  double& at(std::size_t row, std::size_t col) {
    return amplitudes[row * cols() + col];
  }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(amplitudes).subspan(r * cols(), cols());
  }
};

struct WaterfallOptions {
  int nf = 3;           // steepness degree of the row band-pass
  double wd = 64.0;     // bandwidth cap in units of the frequency step
  unsigned threads = 0; // 0: hardware concurrency
};

// Empirical band-pass width for center frequency fc:
//   4 df below 16 df, fc / 4 in between, capped at wd * df,
// evaluated as min(max(4 df, fc / 4), wd * df).
double bandwidth_schedule(double fc, double delta_f, double wd);

// Sign factors (1 - sign(f - mean(f))) on the plain index grid, with the mean
// bin reset to 1: 2 below the midpoint, 1 on it (odd N), 0 above.
RealSeq envelope_sign_factors(std::size_t n);

// Envelope of the band around fc in one pass: band weight times the
// normalized spectrum times envelope_sign_factors, back transform of Y + iY
// scaled by 1/sqrt(2), magnitude.
RealSeq fast_envelope(const Signal& signal, double fc, double bw, int n);

// One fast_envelope row per DFT grid frequency 0 .. fs/2 (N/2 + 1 rows for
// even N), each with bandwidth_schedule(f, df, wd) and degree nf.
// Rows are independent and computed in parallel; the result does not depend
// on the thread count.
WaterfallDiagram waterfall(const Signal& signal,
                           const WaterfallOptions& options = {});

// Periods 1/f for every row; the f = 0 row gets 2 * max(finite periods).
RealSeq period_axis(std::span<const double> frequencies);

// Re-maps a frequency diagram onto a uniform period grid (linear
// interpolation along the row axis). n_periods = 0 picks 4 * rows().
WaterfallDiagram to_period_axis(const WaterfallDiagram& wf,
                                std::size_t n_periods = 0);

// Inverse re-mapping onto the given frequency grid (f = 1/period). Targets
// beyond the period range are clamped to the nearest end row.
WaterfallDiagram to_frequency_axis(const WaterfallDiagram& wf,
                                   std::span<const double> frequencies);

}  // namespace spectral
