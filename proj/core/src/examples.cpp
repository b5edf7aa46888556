#include "spectral/examples.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "spectral/error.hpp"
#include "spectral/noise.hpp"
#include "spectral/window.hpp"

namespace spectral {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<ExampleInfo> kCatalog = {
    {"eq2-1", "sin(2 pi 4t) + 0.5 cos(2 pi 2t) + 1.5 on [0, 1), ts = 0.05", false},
    {"undersampled", "cos(2 pi 25t) + 0.5 sin(2 pi 27t) sampled at fs = 20", false},
    {"cubic", "Tukey(0.2)-windowed -x^3 + 3x, 40 points on [-2.5, 2.5]", false},
    {"lowpass-demo", "cos(4 pi t) + sin(20 pi t) + N(0, 0.5), ts = 0.01", true},
    {"acf-demo", "cos(2 pi 2t) + sin(2 pi 10t) + N(0, sigma), ts = 0.01", true},
    {"two-burst", "Gaussian bursts at 20 Hz (t = 0.2) and 40 Hz (t = 0.7), N = 1024", false},
    {"chirp-mix", "|2t - 1| sin(2 pi 10t) + chirp sin(2 pi 20t^2) for t > 0.5, N = 1024", false},
    {"lomb-gap", "sin(2 pi 7x) on 101 points of [0, 1] with 0.4 < x < 0.7 removed", false},
    {"lomb-jitter", "sin(2 pi x) + sin(2 pi 20x), jittered positions, + N(0, 1)", true},
};

// seq(0, 1, by = ts) with the duplicate period endpoint removed.
RealSeq periodic_grid(double ts) {
  const auto count = static_cast<std::size_t>(std::floor(1.0 / ts + 1e-9));
  if (count < 1) throw Error("ts must not exceed 1 for this example");
  RealSeq x(count);
  for (std::size_t k = 0; k < count; ++k) x[k] = static_cast<double>(k) * ts;
  return x;
}

RealSeq evaluate(const RealSeq& x, const std::function<double(double)>& fn) {
  RealSeq y(x.size());
  std::transform(x.begin(), x.end(), y.begin(), fn);
  return y;
}

double gaussian(double t, double mu, double sd) {
  return std::exp(-(t - mu) * (t - mu) / (2.0 * sd * sd));
}

double take_ts(const ExampleParams& p, double fallback) {
  const double ts = p.ts.value_or(fallback);
  if (!(ts > 0.0) || !std::isfinite(ts)) {
    throw Error("sampling interval must be positive");
  }
  return ts;
}

double take_sigma(const ExampleParams& p, double fallback) {
  const double sigma = p.sigma.value_or(fallback);
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw Error("sigma must be nonnegative");
  }
  return sigma;
}

std::uint64_t take_seed(const ExampleParams& p, std::string_view id) {
  if (!p.seed) throw Error("example " + std::string(id) + " needs an explicit seed");
  return *p.seed;
}

void reject_ts(const ExampleParams& p, std::string_view id) {
  if (p.ts) throw Error("example " + std::string(id) + " has a fixed sampling grid");
}

void reject_sigma(const ExampleParams& p, std::string_view id) {
  if (p.sigma) throw Error("example " + std::string(id) + " has no noise term");
}

Signal noisy_two_tone(const ExampleParams& p, std::string_view id,
                      double sigma_default,
                      const std::function<double(double)>& clean) {
  const double ts = take_ts(p, 0.01);
  const double sigma = take_sigma(p, sigma_default);
  GaussianNoise noise(take_seed(p, id));
  const RealSeq x = periodic_grid(ts);
  RealSeq y = evaluate(x, clean);
  for (double& v : y) v += noise.normal(0.0, sigma);
  return Signal::sampled(std::move(y), ts);
}

}  // namespace

const std::vector<ExampleInfo>& example_catalog() { return kCatalog; }

double eq21_value(double t) {
  return std::sin(2 * kPi * 4 * t) + 0.5 * std::cos(2 * kPi * 2 * t) + 1.5;
}

double two_burst_envelope(double t, int burst) {
  if (burst == 1) return gaussian(t, 0.2, 0.05) / std::sqrt(2 * kPi * 0.05);
  if (burst == 2) return gaussian(t, 0.7, 0.1) / std::sqrt(2 * kPi * 0.1);
  throw Error("burst index must be 1 or 2");
}

double chirp_mix_value(double t) {
  const double carrier = std::abs(2 * t - 1) * std::sin(2 * kPi * 10 * t);
  return carrier + (t <= 0.5 ? 0.0 : std::sin(2 * kPi * 20 * t * t));
}

Signal make_example(std::string_view id, const ExampleParams& p) {
  if (id == "eq2-1") {
    reject_sigma(p, id);
    const double ts = take_ts(p, 0.05);
    return Signal::sampled(evaluate(periodic_grid(ts), eq21_value), ts);
  }
  if (id == "undersampled") {
    reject_sigma(p, id);
    const double ts = take_ts(p, 0.05);
    return Signal::sampled(evaluate(periodic_grid(ts), [](double t) {
                             return std::cos(2 * kPi * 25 * t) +
                                    0.5 * std::sin(2 * kPi * 27 * t);
                           }),
                           ts);
  }
  if (id == "cubic") {
    reject_ts(p, id);
    reject_sigma(p, id);
    RealSeq x(40);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = -2.5 + 5.0 * k / 39.0;
    const RealSeq w = window_tukey(x, 0.2);
    RealSeq y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      y[k] = w[k] * (-x[k] * x[k] * x[k] + 3 * x[k]);
    }
    return Signal::sampled(std::move(y), 5.0 / 39.0, -2.5);
  }
  if (id == "lowpass-demo") {
    return noisy_two_tone(p, id, 0.5, [](double t) {
      return std::cos(4 * kPi * t) + std::sin(20 * kPi * t);
    });
  }
  if (id == "acf-demo") {
    return noisy_two_tone(p, id, 0.5, [](double t) {
      return std::cos(2 * kPi * 2 * t) + std::sin(2 * kPi * 10 * t);
    });
  }
  if (id == "two-burst") {
    reject_sigma(p, id);
    const double ts = take_ts(p, 1.0 / 1024);
    return Signal::sampled(evaluate(periodic_grid(ts), [](double t) {
                             return two_burst_envelope(t, 1) * std::sin(2 * kPi * 20 * t) +
                                    two_burst_envelope(t, 2) * std::sin(2 * kPi * 40 * t);
                           }),
                           ts);
  }
  if (id == "chirp-mix") {
    reject_sigma(p, id);
    const double ts = take_ts(p, 1.0 / 1024);
    return Signal::sampled(evaluate(periodic_grid(ts), chirp_mix_value), ts);
  }
  if (id == "lomb-gap") {
    reject_ts(p, id);
    reject_sigma(p, id);
    RealSeq x;
    for (int k = 0; k <= 100; ++k) {
      const double v = k * 0.01;
      if (!(v > 0.4 && v < 0.7)) x.push_back(v);
    }
    RealSeq y = evaluate(x, [](double t) { return std::sin(2 * kPi * 7 * t); });
    return Signal(std::move(x), std::move(y));
  }
  if (id == "lomb-jitter") {
    reject_ts(p, id);
    const double sigma = take_sigma(p, 1.0);
    GaussianNoise noise(take_seed(p, id));
    RealSeq x;
    for (int k = 0; k <= 100; ++k) x.push_back(k * 0.01 + noise.normal(0.0, 0.01 / 4));
    std::sort(x.begin(), x.end());
    RealSeq y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      y[k] = std::sin(2 * kPi * x[k]) + std::sin(2 * kPi * 20 * x[k]) +
             noise.normal(0.0, sigma);
    }
    return Signal(std::move(x), std::move(y));
  }
  std::string known;
  for (const auto& info : kCatalog) {
    if (!known.empty()) known += ", ";
    known += info.id;
  }
  throw Error("unknown generator '" + std::string(id) + "'; available: " + known);
}

}  // namespace spectral
