#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spectral/signal.hpp"

namespace spectral {

// Least-squares periodogram of possibly irregular samples.
//
// The data are made mean-free before all sums; `mean` is kept so filter_lomb
// can restore it. With Q = R^2/C + I^2/S:
//   amplitude A = sqrt(2 Q / N)
//   power     P = Q / (2 sigma^2)       (so P = N A^2 / (4 sigma^2))
//   phase     phi = -(atan2(I, R) + omega tau), wrapped to (-pi, pi]
// where sigma is the sample standard deviation (divisor N - 1). A component
// A cos(2 pi f t + phi) of the data is reported as (A, phi) at f.
// An f = 0 entry reports A = P = 0, phi = 0 and fap = 1.
struct LombPeriodogram {
  RealSeq frequencies;
  RealSeq amplitude;
  RealSeq phase;
  RealSeq power;
  RealSeq fap;
  std::size_t n_samples = 0;
  std::size_t m_indep = 0;
  double sigma = 0.0;
  double mean = 0.0;

  std::size_t size() const { return frequencies.size(); }
};

struct LombOptions {
  // Independent frequencies for the false alarm probability; 0 means N / 2.
  std::size_t m_indep = 0;
};

// Work counter: number of (sample, frequency) visits made by the estimator.
struct LombWork {
  std::size_t sample_visits = 0;
};

// Two-pass estimator: tau from tan(2 w tau) = sum sin(2 w t) / sum cos(2 w t),
// then R, I, C, S over the shifted arguments w (t - tau).
LombPeriodogram lomb_scargle(const Signal& signal,
                             std::span<const double> frequencies,
                             const LombOptions& options = {},
                             LombWork* work = nullptr);

// Single-pass estimator from the plain sums XC, XS, CC, SS, CS; tau and the
// shifted sums follow in closed form. Agrees with lomb_scargle to rounding.
LombPeriodogram lomb_scargle_fast(const Signal& signal,
                                  std::span<const double> frequencies,
                                  const LombOptions& options = {},
                                  LombWork* work = nullptr);

// Offset tau for angular frequency omega used by lomb_scargle.
double lomb_tau(std::span<const double> positions, double omega);

// p = 1 - (1 - e^{-P})^M, evaluated as -expm1(M log1p(-e^{-P})) so that the
// small-p regime p ~ M e^{-P} keeps full relative precision.
double false_alarm_probability(double power, std::size_t m_indep);

struct Peak {
  double frequency = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double fap = 1.0;
};

struct PeakSet {
  std::vector<Peak> peaks;
};

// Local amplitude maxima (plateaus resolve to their lowest frequency, grid
// ends are eligible) whose fap <= 10^-threshold.
PeakSet select_peaks(const LombPeriodogram& pg, double threshold);

enum class PhaseMode { lin, none };

// mean + sum over selected peaks of A cos(2 pi f x + phi) at new_positions
// (phi = 0 for PhaseMode::none). Throws "no significant component" when no
// peak passes the threshold.
Signal filter_lomb(const LombPeriodogram& pg,
                   std::span<const double> new_positions, double threshold,
                   PhaseMode phase_mode);
Signal reconstruct(const PeakSet& peaks, double mean,
                   std::span<const double> new_positions, PhaseMode phase_mode);

}  // namespace spectral
