#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace spectral {

using Complex = std::complex<double>;
using RealSeq = std::vector<double>;
using ComplexSeq = std::vector<Complex>;

// Throws spectral::Error("non-finite sample") if any entry is NaN or Inf.
void require_finite(std::span<const double> values);
void require_finite(std::span<const Complex> values);

ComplexSeq to_complex(std::span<const double> values);
RealSeq real_part(std::span<const Complex> values);
RealSeq imag_part(std::span<const Complex> values);

// Ordered samples with their positions (time or space).
//
// Positions are strictly increasing. A signal is uniform when every spacing
// matches the mean spacing Ts to within 1e-9 * Ts; only uniform signals can be
// handed to the grid-based transforms. Values may be real or complex; a signal
// built from real values reports is_real() == true.
class Signal {
 public:
  // Uniform grid origin + n * ts.
  static Signal sampled(RealSeq values, double ts, double origin = 0.0);
  static Signal sampled(ComplexSeq values, double ts, double origin = 0.0);

  // Arbitrary positions; uniformity is detected. A single sample counts as
  // uniform with ts = 1.
  Signal(RealSeq positions, RealSeq values);
  Signal(RealSeq positions, ComplexSeq values);

  std::size_t size() const { return positions_.size(); }
  std::span<const double> positions() const { return positions_; }
  std::span<const Complex> values() const { return values_; }
  RealSeq real() const { return real_part(values_); }
  bool is_real() const { return is_real_; }

  bool uniform() const { return uniform_; }
  // Sampling interval; throws unless uniform().
  double ts() const;
  double origin() const { return positions_.front(); }

  // Same positions (and sampling interval), new values.
  Signal with_values(RealSeq values) const;
  Signal with_values(ComplexSeq values) const;

  // Throws the "requires uniform sampling; use lomb module" error when the
  // signal has irregular positions.
  void require_uniform() const;

 private:
  Signal(RealSeq positions, ComplexSeq values, bool is_real, double ts_hint);
  Signal with_real_flag(bool is_real) &&;
  void detect_uniform(double ts_hint);

  RealSeq positions_;
  ComplexSeq values_;
  bool is_real_ = true;
  bool uniform_ = false;
  double ts_ = 0.0;
};

// Frequency grid plus complex amplitudes of a uniformly sampled signal.
//
// Amplitudes follow the 1/N forward normalization: bin 0 of an uncentered
// spectrum (or the f = 0 bin of a centered one) holds the mean of the signal.
// `ts` and `origin` describe the source grid so the inverse can restore the
// original positions.
struct Spectrum {
  RealSeq frequencies;
  ComplexSeq amplitudes;
  bool centered = false;
  std::size_t n_samples = 0;
  double ts = 0.0;
  double origin = 0.0;

  // Frequency step 1 / (Ts * N).
  double resolution() const;
};

}  // namespace spectral
