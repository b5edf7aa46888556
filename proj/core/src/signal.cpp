#include "spectral/signal.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "spectral/error.hpp"

namespace spectral {

namespace {
constexpr double kUniformTolerance = 1e-9;
}

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw Error("non-finite sample");
  }
}

void require_finite(std::span<const Complex> values) {
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error("non-finite sample");
    }
  }
}

ComplexSeq to_complex(std::span<const double> values) {
  return ComplexSeq(values.begin(), values.end());
}

RealSeq real_part(std::span<const Complex> values) {
  RealSeq out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [](const Complex& c) { return c.real(); });
  return out;
}

RealSeq imag_part(std::span<const Complex> values) {
  RealSeq out(values.size());
  std::transform(values.begin(), values.end(), out.begin(),
                 [](const Complex& c) { return c.imag(); });
  return out;
}

Signal Signal::sampled(RealSeq values, double ts, double origin) {
  return sampled(to_complex(values), ts, origin).with_real_flag(true);
}

Signal Signal::sampled(ComplexSeq values, double ts, double origin) {
  if (!(ts > 0.0) || !std::isfinite(ts)) {
    throw Error("sampling interval must be positive");
  }
  if (!std::isfinite(origin)) throw Error("non-finite sample");
  RealSeq positions(values.size());
  for (std::size_t n = 0; n < positions.size(); ++n) {
    positions[n] = origin + static_cast<double>(n) * ts;
  }
  return Signal(std::move(positions), std::move(values), false, ts);
}

Signal::Signal(RealSeq positions, RealSeq values)
    : Signal(std::move(positions), to_complex(values), true, 0.0) {}

Signal::Signal(RealSeq positions, ComplexSeq values)
    : Signal(std::move(positions), std::move(values), false, 0.0) {}

Signal::Signal(RealSeq positions, ComplexSeq values, bool is_real,
               double ts_hint)
    : positions_(std::move(positions)),
      values_(std::move(values)),
      is_real_(is_real) {
  if (values_.empty()) throw Error("empty signal");
  if (positions_.size() != values_.size()) {
    throw Error("positions and values differ in length");
  }
  require_finite(positions_);
  require_finite(values_);
  for (std::size_t n = 1; n < positions_.size(); ++n) {
    if (!(positions_[n] > positions_[n - 1])) {
      throw Error("positions must be strictly increasing");
    }
  }
  if (!is_real_) {
    is_real_ = std::all_of(values_.begin(), values_.end(),
                           [](const Complex& c) { return c.imag() == 0.0; });
  }
  detect_uniform(ts_hint);
}

Signal Signal::with_real_flag(bool is_real) && {
  is_real_ = is_real;
  return std::move(*this);
}

void Signal::detect_uniform(double ts_hint) {
  const std::size_t n = positions_.size();
  if (n == 1) {
    uniform_ = true;
    ts_ = ts_hint > 0.0 ? ts_hint : 1.0;
    return;
  }
  const double ts = (positions_.back() - positions_.front()) /
                    static_cast<double>(n - 1);
  double worst = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    worst = std::max(worst,
                     std::abs(positions_[k] - positions_[k - 1] - ts));
  }
  uniform_ = worst <= kUniformTolerance * ts;
  ts_ = uniform_ ? (ts_hint > 0.0 ? ts_hint : ts) : 0.0;
}

Signal Signal::with_values(RealSeq values) const {
  return Signal(positions_, to_complex(values), true, ts_);
}

Signal Signal::with_values(ComplexSeq values) const {
  return Signal(positions_, std::move(values), false, ts_);
}

double Signal::ts() const {
  require_uniform();
  return ts_;
}

void Signal::require_uniform() const {
  if (!uniform_) throw Error("requires uniform sampling; use lomb module");
}

double Spectrum::resolution() const {
  if (!(ts > 0.0) || n_samples == 0) throw Error("spectrum has no sampling grid");
  return 1.0 / (ts * static_cast<double>(n_samples));
}

}  // namespace spectral
