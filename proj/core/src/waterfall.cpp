#include "spectral/waterfall.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <utility>

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

RealSeq envelope_from_spectrum(const ComplexSeq& spectrum,
                               const RealSeq& sign_factors, double df,
                               const FilterSpec& spec) {
  const std::size_t n = spectrum.size();
  ComplexSeq y(n);
  for (std::size_t m = 0; m < n; ++m) {
    y[m] = spectrum[m] * sign_factors[m] *
           band_weight(static_cast<double>(m) * df, spec);
  }
  // (Y + iY) / sqrt(2) has the magnitude of Y; kept in this form to mirror
  // the one-step demodulation.
  const Complex rotate = Complex{1.0, 1.0} / std::sqrt(2.0);
  for (auto& v : y) v *= rotate;
  const ComplexSeq back = dft_inverse(y);
  RealSeq out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = std::abs(back[k]);
  return out;
}

// Sorted (period, source row) pairs.
std::vector<std::pair<double, std::size_t>> sorted_periods(
    std::span<const double> periods) {
  std::vector<std::pair<double, std::size_t>> order(periods.size());
  for (std::size_t r = 0; r < periods.size(); ++r) order[r] = {periods[r], r};
  std::sort(order.begin(), order.end());
  return order;
}

// Linear interpolation of every column at abscissa x over sorted nodes;
// clamps outside the node range.
void interpolate_row(const WaterfallDiagram& src,
                     const std::vector<std::pair<double, std::size_t>>& nodes,
                     double x, std::span<double> out) {
  const std::size_t cols = src.cols();
  if (x <= nodes.front().first || nodes.size() == 1) {
    const auto row = src.row(nodes.front().second);
    std::copy(row.begin(), row.end(), out.begin());
    return;
  }
  if (x >= nodes.back().first) {
    const auto row = src.row(nodes.back().second);
    std::copy(row.begin(), row.end(), out.begin());
    return;
  }
  auto hi = std::upper_bound(
      nodes.begin(), nodes.end(), x,
      [](double value, const auto& node) { return value < node.first; });
  auto lo = hi - 1;
  const double span = hi->first - lo->first;
  const double w = span > 0.0 ? (x - lo->first) / span : 0.0;
  const auto a = src.row(lo->second);
  const auto b = src.row(hi->second);
  for (std::size_t c = 0; c < cols; ++c) out[c] = (1.0 - w) * a[c] + w * b[c];
}

}  // namespace

double bandwidth_schedule(double fc, double delta_f, double wd) {
  if (!(delta_f > 0.0) || !(wd > 0.0) || !(fc >= 0.0) ||
      !std::isfinite(fc) || !std::isfinite(delta_f) || !std::isfinite(wd)) {
    throw Error("bandwidth_schedule needs fc >= 0, delta_f > 0 and wd > 0");
  }
  return std::min(std::max(4.0 * delta_f, fc / 4.0), wd * delta_f);
}

RealSeq envelope_sign_factors(std::size_t n) {
  RealSeq s(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    // sign(m - (n-1)/2) compared in integers: 2m vs n-1
    if (2 * m + 1 < n) {
      s[m] = 2.0;
    } else if (2 * m + 1 == n) {
      s[m] = 1.0;
    }
  }
  if (n > 0) s[0] = 1.0;
  return s;
}

RealSeq fast_envelope(const Signal& signal, double fc, double bw, int n) {
  const FilterSpec spec{fc, bw, n};
  spec.validate();
  const RealSeq values = checked_real_values(signal, "fast_envelope");
  const ComplexSeq spectrum = dft_forward(values);
  const double df =
      1.0 / (signal.ts() * static_cast<double>(spectrum.size()));
  return envelope_from_spectrum(spectrum, envelope_sign_factors(values.size()),
                                df, spec);
}

WaterfallDiagram waterfall(const Signal& signal,
                           const WaterfallOptions& options) {
  const RealSeq values = checked_real_values(signal, "waterfall");
  const std::size_t n = values.size();
  if (n < 8) throw Error("waterfall needs at least eight samples");
  if (options.nf < 1) throw Error("filter degree must be at least 1");
  if (!(options.wd > 0.0)) throw Error("wd must be positive");

  const double df = 1.0 / (signal.ts() * static_cast<double>(n));
  const ComplexSeq spectrum = dft_forward(values);
  const RealSeq sign_factors = envelope_sign_factors(n);

  WaterfallDiagram wf;
  wf.times.assign(signal.positions().begin(), signal.positions().end());
  const std::size_t rows = n / 2 + 1;
  wf.frequencies.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    wf.frequencies[r] = static_cast<double>(r) * df;
  }
  wf.amplitudes.assign(rows * n, 0.0);

  auto compute_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < rows; r += stride) {
      const double fc = wf.frequencies[r];
      const FilterSpec spec{fc, bandwidth_schedule(fc, df, options.wd),
                            options.nf};
      const RealSeq row = envelope_from_spectrum(spectrum, sign_factors, df, spec);
      std::copy(row.begin(), row.end(), wf.amplitudes.begin() + r * n);
    }
  };

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, rows));
  if (threads <= 1) {
    compute_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(compute_rows, t, threads);
    }
  }
  return wf;
}

RealSeq period_axis(std::span<const double> frequencies) {
  RealSeq periods(frequencies.size());
  double max_finite = 0.0;
  bool any_finite = false;
  for (std::size_t r = 0; r < frequencies.size(); ++r) {
    if (frequencies[r] > 0.0) {
      periods[r] = 1.0 / frequencies[r];
      max_finite = std::max(max_finite, periods[r]);
      any_finite = true;
    } else if (frequencies[r] < 0.0) {
      throw Error("period axis needs nonnegative frequencies");
    }
  }
  if (!any_finite) throw Error("period axis needs a positive frequency");
  for (std::size_t r = 0; r < frequencies.size(); ++r) {
    if (frequencies[r] == 0.0) periods[r] = 2.0 * max_finite;
  }
  return periods;
}

WaterfallDiagram to_period_axis(const WaterfallDiagram& wf,
                                std::size_t n_periods) {
  if (wf.axis_mode != AxisMode::frequency) {
    throw Error("diagram is already in period mode");
  }
  if (wf.rows() == 0) throw Error("empty waterfall diagram");
  const RealSeq periods = period_axis(wf.frequencies);
  const auto nodes = sorted_periods(periods);
  if (n_periods == 0) n_periods = 4 * wf.rows();
  if (n_periods < 2) n_periods = 2;

  WaterfallDiagram out;
  out.axis_mode = AxisMode::period;
  out.times = wf.times;
  out.frequencies.resize(n_periods);
  out.amplitudes.assign(n_periods * wf.cols(), 0.0);
  const double lo = nodes.front().first;
  const double hi = nodes.back().first;
  for (std::size_t k = 0; k < n_periods; ++k) {
    const double p =
        lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n_periods - 1);
    out.frequencies[k] = p;
    interpolate_row(wf, nodes,
                    p, std::span<double>(out.amplitudes).subspan(k * wf.cols(), wf.cols()));
  }
  return out;
}

WaterfallDiagram to_frequency_axis(const WaterfallDiagram& wf,
                                   std::span<const double> frequencies) {
  if (wf.axis_mode != AxisMode::period) {
    throw Error("diagram is already in frequency mode");
  }
  if (wf.rows() == 0) throw Error("empty waterfall diagram");
  const auto nodes = sorted_periods(wf.frequencies);

  WaterfallDiagram out;
  out.axis_mode = AxisMode::frequency;
  out.times = wf.times;
  out.frequencies.assign(frequencies.begin(), frequencies.end());
  out.amplitudes.assign(frequencies.size() * wf.cols(), 0.0);
  for (std::size_t k = 0; k < frequencies.size(); ++k) {
    const double f = frequencies[k];
    if (f < 0.0) throw Error("frequency axis must be nonnegative");
    const double p = f > 0.0 ? 1.0 / f : std::numeric_limits<double>::infinity();
    interpolate_row(wf, nodes, p,
                    std::span<double>(out.amplitudes).subspan(k * wf.cols(), wf.cols()));
  }
  return out;
}

}  // namespace spectral
