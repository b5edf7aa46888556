#include "spectral/lomb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spectral/error.hpp"

namespace spectral {

namespace {

// Shifted sums below this fraction of N are treated as a vanishing regressor
// (e.g. the sine column at the Nyquist frequency of a uniform grid).
constexpr double kDegenerate = 1e-10;

double wrap_phase(double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  phi = std::remainder(phi, two_pi);  // [-pi, pi]
  if (phi <= -std::numbers::pi) phi += two_pi;
  return phi;
}

struct Prepared {
  RealSeq t;
  RealSeq y;  // mean-free
  double mean = 0.0;
  double sigma = 0.0;
  std::size_t m_indep = 0;
};

Prepared prepare(const Signal& signal, std::span<const double> frequencies,
                 const LombOptions& options) {
  if (signal.size() < 3) throw Error("lomb_scargle needs at least three samples");
  if (!signal.is_real()) throw Error("lomb_scargle requires a real-valued signal");
  for (double f : frequencies) {
    if (!std::isfinite(f)) throw Error("non-finite frequency");
    if (f < 0.0) throw Error("nonpositive frequency");
  }
  Prepared p;
  p.t.assign(signal.positions().begin(), signal.positions().end());
  p.y = signal.real();
  const double n = static_cast<double>(p.y.size());
  double sum = 0.0;
  for (double v : p.y) sum += v;
  p.mean = sum / n;
  double ss = 0.0;
  for (double& v : p.y) {
    v -= p.mean;
    ss += v * v;
  }
  p.sigma = std::sqrt(ss / (n - 1.0));
  if (!(p.sigma > 0.0)) throw Error("zero variance");
  p.m_indep = options.m_indep > 0 ? options.m_indep
                                  : std::max<std::size_t>(1, p.y.size() / 2);
  return p;
}

LombPeriodogram allocate(const Prepared& p, std::span<const double> frequencies) {
  LombPeriodogram pg;
  pg.frequencies.assign(frequencies.begin(), frequencies.end());
  const std::size_t k = frequencies.size();
  pg.amplitude.assign(k, 0.0);
  pg.phase.assign(k, 0.0);
  pg.power.assign(k, 0.0);
  pg.fap.assign(k, 1.0);
  pg.n_samples = p.y.size();
  pg.m_indep = p.m_indep;
  pg.sigma = p.sigma;
  pg.mean = p.mean;
  return pg;
}

// Fills column i from the shifted sums.
void finish_column(LombPeriodogram& pg, std::size_t i, double omega, double tau,
                   double r, double im, double c, double s) {
  const double n = static_cast<double>(pg.n_samples);
  double q = 0.0;
  if (c > kDegenerate * n) q += r * r / c;
  if (s > kDegenerate * n) q += im * im / s;
  pg.amplitude[i] = std::sqrt(2.0 * q / n);
  pg.power[i] = q / (2.0 * pg.sigma * pg.sigma);
  // atan2 of the components scaled by their norm, as in the reference code
  const double l = std::hypot(r, im);
  const double theta = l > 0.0 ? std::atan2(im / l, r / l) : 0.0;
  pg.phase[i] = wrap_phase(-(theta + omega * tau));
  pg.fap[i] = false_alarm_probability(pg.power[i], pg.m_indep);
}

}  // namespace

double lomb_tau(std::span<const double> positions, double omega) {
  double ss = 0.0;
  double cs = 0.0;
  for (double t : positions) {
    ss += std::sin(2.0 * omega * t);
    cs += std::cos(2.0 * omega * t);
  }
  return std::atan2(ss, cs) / (2.0 * omega);
}

LombPeriodogram lomb_scargle(const Signal& signal,
                             std::span<const double> frequencies,
                             const LombOptions& options, LombWork* work) {
  const Prepared p = prepare(signal, frequencies, options);
  LombPeriodogram pg = allocate(p, frequencies);
  const std::size_t n = p.y.size();
  std::size_t visits = 0;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    if (frequencies[i] == 0.0) continue;
    const double omega = 2.0 * std::numbers::pi * frequencies[i];
    const double tau = lomb_tau(p.t, omega);
    double r = 0.0, im = 0.0, c = 0.0, s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double arg = omega * (p.t[k] - tau);
      const double co = std::cos(arg);
      const double si = std::sin(arg);
      r += p.y[k] * co;
      im += p.y[k] * si;
      c += co * co;
      s += si * si;
    }
    visits += 2 * n;
    finish_column(pg, i, omega, tau, r, im, c, s);
  }
  if (work) work->sample_visits += visits;
  return pg;
}

LombPeriodogram lomb_scargle_fast(const Signal& signal,
                                  std::span<const double> frequencies,
                                  const LombOptions& options, LombWork* work) {
  const Prepared p = prepare(signal, frequencies, options);
  LombPeriodogram pg = allocate(p, frequencies);
  const std::size_t n = p.y.size();
  std::size_t visits = 0;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    if (frequencies[i] == 0.0) continue;
    const double omega = 2.0 * std::numbers::pi * frequencies[i];
    double xc = 0.0, xs = 0.0, cc = 0.0, ss = 0.0, cs = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double co = std::cos(omega * p.t[k]);
      const double si = std::sin(omega * p.t[k]);
      xc += p.y[k] * co;
      xs += p.y[k] * si;
      cc += co * co;
      ss += si * si;
      cs += co * si;
    }
    visits += n;
    // tan(2 w tau) = 2 CS / (CC - SS)
    const double tau = std::atan2(2.0 * cs, cc - ss) / (2.0 * omega);
    const double ct = std::cos(omega * tau);
    const double st = std::sin(omega * tau);
    const double r = ct * xc + st * xs;
    const double im = ct * xs - st * xc;
    const double cross = 2.0 * ct * st * cs;
    const double c = ct * ct * cc + cross + st * st * ss;
    const double s = ct * ct * ss - cross + st * st * cc;
    finish_column(pg, i, omega, tau, r, im, c, s);
  }
  if (work) work->sample_visits += visits;
  return pg;
}

double false_alarm_probability(double power, std::size_t m_indep) {
  if (std::isnan(power)) throw Error("non-finite power");
  if (power < 0.0) throw Error("negative power");
  if (m_indep < 1) throw Error("m_indep must be at least 1");
  const double m = static_cast<double>(m_indep);
  const double p = -std::expm1(m * std::log1p(-std::exp(-power)));
  return std::clamp(p, 0.0, 1.0);
}

PeakSet select_peaks(const LombPeriodogram& pg, double threshold) {
  if (!std::isfinite(threshold)) throw Error("threshold must be finite");
  const double limit = std::pow(10.0, -threshold);
  const auto& a = pg.amplitude;
  const std::size_t k = a.size();
  PeakSet out;
  std::size_t i = 0;
  while (i < k) {
    std::size_t j = i;
    while (j + 1 < k && a[j + 1] == a[i]) ++j;
    const bool left_ok = i == 0 || a[i - 1] < a[i];
    const bool right_ok = j + 1 == k || a[j + 1] < a[i];
    if (left_ok && right_ok && a[i] > 0.0 && pg.fap[i] <= limit) {
      out.peaks.push_back({pg.frequencies[i], a[i], pg.phase[i], pg.fap[i]});
    }
    i = j + 1;
  }
  return out;
}

Signal reconstruct(const PeakSet& peaks, double mean,
                   std::span<const double> new_positions, PhaseMode phase_mode) {
  RealSeq y(new_positions.size(), mean);
  for (const Peak& peak : peaks.peaks) {
    const double omega = 2.0 * std::numbers::pi * peak.frequency;
    const double phi = phase_mode == PhaseMode::lin ? peak.phase : 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
      y[k] += peak.amplitude * std::cos(omega * new_positions[k] + phi);
    }
  }
  return Signal(RealSeq(new_positions.begin(), new_positions.end()), std::move(y));
}

Signal filter_lomb(const LombPeriodogram& pg,
                   std::span<const double> new_positions, double threshold,
                   PhaseMode phase_mode) {
  if (pg.size() == 0) throw Error("empty periodogram");
  if (new_positions.empty()) throw Error("empty signal");
  require_finite(new_positions);
  const PeakSet peaks = select_peaks(pg, threshold);
  if (peaks.peaks.empty()) throw Error("no significant component");
  return reconstruct(peaks, pg.mean, new_positions, phase_mode);
}

}  // namespace spectral
