#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spectral/analytic.hpp"
#include "spectral/error.hpp"
#include "spectral/filtering.hpp"
#include "spectral/noise.hpp"
#include "spectral/qdt.hpp"
#include "spectral/transform.hpp"
#include "spectral/window.hpp"

using namespace spectral;
constexpr double kPi = std::numbers::pi;

namespace {

RealSeq sample(std::size_t n, double ts, auto fn) {
  RealSeq v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = fn(k * ts);
  return v;
}

double energy(const RealSeq& v) {
  double e = 0;
  for (double x : v) e += x * x;
  return e;
}

}  // namespace

// ---- convolution / polynomials --------------------------------------------------

TEST(Convolve, worked_example) {
  const RealSeq c = convolve_fft(RealSeq{1, 2, 3, 0, 0}, RealSeq{5, 6, 7, 0, 0});
  const RealSeq want{5, 16, 34, 32, 21};
  EXPECT_LE(oracle::max_abs_diff(c, want), 1e-9);
}

TEST(Convolve, impulse_is_identity) {
  const RealSeq x{0.3, -1.2, 4.0, 2.5, -0.7, 1.1};
  RealSeq delta(6, 0.0);
  delta[0] = 1.0;
  EXPECT_LE(oracle::max_abs_diff(convolve_fft(x, delta), x), 1e-12);
}

TEST(Convolve, random_length_17_matches_direct_sum) {
  oracle::Gen g(61);
  const RealSeq a = g.reals(17, -5, 5);
  const RealSeq b = g.reals(17, -5, 5);
  EXPECT_LE(oracle::max_abs_diff(convolve_fft(a, b), oracle::circular_convolution(a, b)), 1e-9);
}

TEST(Convolve, length_mismatch) {
  try {
    (void)convolve_fft(RealSeq{1, 2}, RealSeq{1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "pad to equal length");
  }
}

TEST(PolyMultiply, worked_example_and_unit) {
  EXPECT_LE(oracle::max_abs_diff(poly_multiply(RealSeq{1, 2, 3}, RealSeq{5, 6, 7}),
                                 RealSeq{5, 16, 34, 32, 21}),
            1e-9);
  const RealSeq p{2, -1, 0.5, 3};
  EXPECT_LE(oracle::max_abs_diff(poly_multiply(p, RealSeq{1}), p), 1e-12);
}

TEST(PolyMultiply, degree_8_matches_schoolbook) {
  oracle::Gen g(62);
  for (int c = 0; c < 50; ++c) {
    const RealSeq a = g.reals(9, -3, 3);
    const RealSeq b = g.reals(9, -3, 3);
    EXPECT_LE(oracle::max_abs_diff(poly_multiply(a, b), oracle::schoolbook_product(a, b)), 1e-9);
  }
}

TEST(PolyMultiply, flop_model_reproduces_table) {
  // FFT column of the cost table for degrees 8, 16, 32, 64
  const std::pair<std::size_t, long> table[] = {{8, 209}, {16, 500}, {32, 1175}, {64, 2714}};
  for (auto [n, want] : table) EXPECT_EQ(std::lround(std::ceil(fft_flop_estimate(n))), want) << n;
}

TEST(ConvolveProperty, convolution_theorem) {
  oracle::Gen g(63);
  for (std::size_t n : {5u, 8u, 13u, 17u}) {
    for (int c = 0; c < 60; ++c) {
      const RealSeq a = g.reals(n);
      const RealSeq b = g.reals(n);
      const ComplexSeq lhs = dft_forward(convolve_fft(a, b));
      const ComplexSeq fa = dft_forward(a);
      const ComplexSeq fb = dft_forward(b);
      for (std::size_t m = 0; m < n; ++m) {
        EXPECT_LE(std::abs(lhs[m] - static_cast<double>(n) * fa[m] * fb[m]), 1e-10);
      }
    }
  }
}

TEST(ConvolveProperty, commutative_and_associative) {
  oracle::Gen g(64);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = g.size(1, 40);
    const RealSeq a = g.reals(n), b = g.reals(n), d = g.reals(n);
    EXPECT_LE(oracle::max_abs_diff(convolve_fft(a, b), convolve_fft(b, a)), 1e-10);
    EXPECT_LE(oracle::max_abs_diff(convolve_fft(convolve_fft(a, b), d),
                                   convolve_fft(a, convolve_fft(b, d))),
              1e-10);
  }
}

// ---- windows --------------------------------------------------------------------

TEST(Window, tukey_shape) {
  RealSeq x(101);
  for (int k = 0; k <= 100; ++k) x[k] = k / 100.0;
  const RealSeq w = window_tukey(x, 0.05);
  EXPECT_EQ(w.front(), 0.0);
  EXPECT_EQ(w.back(), 0.0);
  EXPECT_EQ(w[50], 1.0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    EXPECT_GE(w[k], 0.0);
    EXPECT_LE(w[k], 1.0);
    EXPECT_NEAR(w[k], w[w.size() - 1 - k], 1e-12);
  }
  // quarter cosine: at u = alpha / 2 the ramp is sin^2(pi/4) = 0.5
  const RealSeq half = window_tukey(RealSeq{0.0, 0.025, 1.0}, 0.05);
  EXPECT_NEAR(half[1], 0.5, 1e-12);
  EXPECT_THROW((void)window_tukey(x, 0.0), Error);
  EXPECT_THROW((void)window_tukey(x, 1.5), Error);
  EXPECT_THROW((void)window_tukey(RealSeq{}, 0.5), Error);
}

TEST(Window, tukey_tapers_cubic_to_zero_at_ends) {
  RealSeq x(40), y(40);
  for (int k = 0; k < 40; ++k) x[k] = -2.5 + 5.0 * k / 39.0;
  const RealSeq w = window_tukey(x, 0.2);
  for (int k = 0; k < 40; ++k) y[k] = w[k] * (-x[k] * x[k] * x[k] + 3 * x[k]);
  EXPECT_LE(std::abs(y.front()), 1e-12);
  EXPECT_LE(std::abs(y.back()), 1e-12);
  EXPECT_EQ(w[20], 1.0);
}

TEST(Window, hamming_blackman) {
  for (auto fn : {window_hamming, window_blackman}) {
    EXPECT_EQ(fn(1), RealSeq{1.0});
    EXPECT_THROW((void)fn(0), Error);
    for (std::size_t n : {2u, 5u, 16u, 33u}) {
      const RealSeq w = fn(n);
      double sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_EQ(w[k], w[n - 1 - k]);
        EXPECT_GE(w[k], 0.0);
        EXPECT_LE(w[k], 1.0);
        sum += w[k];
      }
      if (!(fn == window_blackman && n == 2)) EXPECT_GT(sum, 0.0);
      EXPECT_LE(sum, static_cast<double>(n));
      if (n % 2 == 1) EXPECT_NEAR(w[n / 2], 1.0, 1e-15);
    }
  }
  EXPECT_NEAR(window_hamming(3)[0], 0.08, 1e-15);
  EXPECT_NEAR(window_blackman(3)[0], 0.0, 1e-15);
  // the standard symmetric Blackman form vanishes identically at n = 2
  EXPECT_EQ(window_blackman(2), (RealSeq{0.0, 0.0}));
}

// ---- spectral derivative ------------------------------------------------------

TEST(Derivative, constant_is_annihilated) {
  const Signal d = spectral_derivative(Signal::sampled(RealSeq(16, 3.0), 0.1));
  EXPECT_LE(oracle::max_abs(d.real()), 1e-12);
}

TEST(Derivative, sine_on_periodic_grid) {
  const double ts = 1.0 / 32;
  const RealSeq v = sample(32, ts, [](double t) { return std::sin(2 * kPi * t); });
  const RealSeq want = sample(32, ts, [](double t) { return 2 * kPi * std::cos(2 * kPi * t); });
  const RealSeq d = spectral_derivative(Signal::sampled(v, ts)).real();
  EXPECT_LE(oracle::max_abs_diff(d, want), 1e-9);
  // central differences agree to O(Ts^2)
  for (std::size_t k = 0; k < 32; ++k) {
    const double fd = (v[(k + 1) % 32] - v[(k + 31) % 32]) / (2 * ts);
    EXPECT_NEAR(fd, d[k], 4 * kPi * kPi * kPi * ts * ts);
  }
}

TEST(Derivative, odd_length_grid) {
  const double ts = 1.0 / 31;
  const RealSeq v = sample(31, ts, [](double t) { return std::cos(2 * kPi * 3 * t) + 0.5 * std::sin(2 * kPi * 15 * t); });
  const RealSeq want = sample(31, ts, [](double t) {
    return -6 * kPi * std::sin(2 * kPi * 3 * t) + 15 * kPi * std::cos(2 * kPi * 15 * t);
  });
  EXPECT_LE(oracle::max_abs_diff(spectral_derivative(Signal::sampled(v, ts)).real(), want), 1e-9);
}

TEST(Derivative, tukey_windowed_cubic_mid_range) {
  RealSeq x(40), y(40);
  for (int k = 0; k < 40; ++k) x[k] = -2.5 + 5.0 * k / 39.0;
  const RealSeq w = window_tukey(x, 0.2);
  for (int k = 0; k < 40; ++k) y[k] = w[k] * (-x[k] * x[k] * x[k] + 3 * x[k]);
  const RealSeq d = spectral_derivative(Signal(x, y)).real();
  double peak = 0;
  for (double xi : x) peak = std::max(peak, std::abs(-3 * xi * xi + 3));
  for (int k = 10; k < 30; ++k) {
    EXPECT_NEAR(d[k], -3 * x[k] * x[k] + 3, 0.05 * peak) << "x=" << x[k];
  }
}

TEST(DerivativeProperty, linear) {
  oracle::Gen g(65);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = g.size(1, 64);
    const RealSeq a = g.reals(n), b = g.reals(n);
    const double p = g.uniform(-3, 3), q = g.uniform(-3, 3);
    RealSeq mix(n);
    for (std::size_t k = 0; k < n; ++k) mix[k] = p * a[k] + q * b[k];
    const RealSeq da = spectral_derivative(Signal::sampled(a, 0.3)).real();
    const RealSeq db = spectral_derivative(Signal::sampled(b, 0.3)).real();
    const RealSeq dm = spectral_derivative(Signal::sampled(mix, 0.3)).real();
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(dm[k], p * da[k] + q * db[k], 1e-10);
  }
}

// ---- moving average -------------------------------------------------------------

TEST(MovingAverage, constant_has_unity_gain) {
  for (bool pc : {false, true}) {
    const RealSeq out = moving_average(Signal::sampled(RealSeq(50, 2.0), 0.01), Kernel::boxcar(5), pc).real();
    for (double v : out) EXPECT_NEAR(v, 2.0, 1e-12);
  }
}

TEST(MovingAverage, five_tap_null_rejects_10hz) {
  // five taps span one 10 Hz period at Ts = 0.02: complete rejection
  const RealSeq v = sample(50, 0.02, [](double t) { return std::sin(20 * kPi * t); });
  for (bool pc : {false, true}) {
    const Signal out = moving_average(Signal::sampled(v, 0.02), Kernel::boxcar(5), pc);
    const ComplexSeq s = dft_forward(out.real());
    EXPECT_LE(std::abs(s[10]), 1e-9);
    EXPECT_LE(std::abs(s[40]), 1e-9);
  }
}

TEST(MovingAverage, five_tap_gain_at_10hz_for_ts_001) {
  // at Ts = 0.01 the 5-tap nulls sit at 20 Hz; 10 Hz passes with the
  // Dirichlet gain |sin(pi/2) / (5 sin(pi/10))|
  const RealSeq v = sample(100, 0.01, [](double t) { return std::sin(20 * kPi * t); });
  const double gain = 1.0 / (5.0 * std::sin(kPi / 10));
  for (bool pc : {false, true}) {
    const Signal out = moving_average(Signal::sampled(v, 0.01), Kernel::boxcar(5), pc);
    EXPECT_NEAR(qdt_demodulate(out, 20 * kPi).amplitude, gain, 1e-9);
    const ComplexSeq s = dft_forward(out.real());
    EXPECT_LE(std::abs(s[20]), 1e-12);
  }
}

TEST(MovingAverage, uncorrected_matches_direct_circular_sum) {
  oracle::Gen g(66);
  for (int c = 0; c < 50; ++c) {
    const std::size_t n = g.size(3, 60);
    const std::size_t nk = g.size(1, n);
    const RealSeq v = g.reals(n);
    Kernel k{g.reals(nk)};
    RealSeq padded(n, 0.0);
    std::copy(k.taps.begin(), k.taps.end(), padded.begin());
    const RealSeq want = oracle::circular_convolution(v, padded);
    const RealSeq got = moving_average(Signal::sampled(v, 0.1), k, false).real();
    EXPECT_LE(oracle::max_abs_diff(got, want), 1e-9);
  }
}

TEST(MovingAverage, phase_corrected_grid_tone_keeps_phase) {
  // pure grid tone through a symmetric boxcar: output = |K(f)| * tone, no shift
  oracle::Gen g(67);
  for (int c = 0; c < 100; ++c) {
    const std::size_t n = g.size(8, 64);
    const std::size_t nk = g.size(1, std::min<std::size_t>(n, 9));
    const std::size_t bin = g.size(1, (n - 1) / 2);
    const double phi = g.uniform(-kPi, kPi);
    const double ts = 0.01;
    const double f = bin / (n * ts);
    const RealSeq v = sample(n, ts, [&](double t) { return std::cos(2 * kPi * f * t + phi); });
    const RealSeq out = moving_average(Signal::sampled(v, ts), Kernel::boxcar(nk), true).real();
    // |K(f)| of the boxcar, Dirichlet kernel
    const double x = kPi * bin / static_cast<double>(n);
    const double gain = std::abs(std::sin(nk * x) / (nk * std::sin(x)));
    const QdtResult in_q = qdt_demodulate(Signal::sampled(v, ts), 2 * kPi * f);
    const QdtResult out_q = qdt_demodulate(Signal::sampled(out, ts), 2 * kPi * f);
    EXPECT_NEAR(out_q.amplitude, gain, 1e-9);
    if (gain > 1e-6) {
      // sign flips of the Dirichlet kernel show up as a shift by pi
      double d = std::abs(std::remainder(out_q.phase - in_q.phase, 2 * kPi));
      d = std::min(d, std::abs(kPi - d));
      EXPECT_LE(d, 1e-6) << "n=" << n << " nk=" << nk << " bin=" << bin;
    }
  }
}

TEST(MovingAverage, errors) {
  EXPECT_THROW((void)moving_average(Signal::sampled(RealSeq(4, 1.0), 1.0), Kernel::boxcar(5), false), Error);
  try {
    (void)moving_average(Signal::sampled(RealSeq(4, 1.0), 1.0), Kernel::boxcar(5), false);
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "kernel longer than signal");
  }
  EXPECT_THROW((void)moving_average(Signal(RealSeq{0, 1, 3}, RealSeq{1, 2, 3}), Kernel::boxcar(1), false), Error);
}

// ---- filter_fft -----------------------------------------------------------------

TEST(FilterFft, band_weight_profile) {
  const FilterSpec s{10.0, 2.0, 3};
  EXPECT_EQ(band_weight(10.0, s), 1.0);
  EXPECT_EQ(band_weight(12.0, s), 1.0);
  EXPECT_EQ(band_weight(8.0, s), 1.0);
  EXPECT_NEAR(band_weight(13.0, s), 0.125, 1e-15);
  EXPECT_EQ(band_weight(14.0, s), 0.0);
  EXPECT_EQ(band_weight(30.0, s), 0.0);
  // higher degree -> closer to a brick wall
  EXPECT_LT(band_weight(13.0, FilterSpec{10.0, 2.0, 10}), band_weight(13.0, s));
}

TEST(FilterFft, validation) {
  const Signal s = Signal::sampled(RealSeq(16, 1.0), 0.1);
  EXPECT_THROW((void)filter_fft(s, FilterSpec{0, 0.0, 3}), Error);
  EXPECT_THROW((void)filter_fft(s, FilterSpec{0, -1.0, 3}), Error);
  EXPECT_THROW((void)filter_fft(s, FilterSpec{0, 1.0, 0}), Error);
  EXPECT_THROW((void)filter_fft(Signal(RealSeq{0, 1, 3}, RealSeq{1, 2, 3}), FilterSpec{0, 1, 3}), Error);
}

TEST(FilterFft, in_band_tone_is_unchanged) {
  const RealSeq v = sample(100, 0.01, [](double t) { return 0.7 * std::sin(2 * kPi * 12 * t + 0.3); });
  const RealSeq out = filter_fft(Signal::sampled(v, 0.01), FilterSpec{12.0, 2.0, 3}).real();
  EXPECT_LE(oracle::max_abs_diff(out, v), 1e-6);
}

TEST(FilterFft, out_of_band_tone_is_rejected) {
  const RealSeq v = sample(100, 0.01, [](double t) { return std::cos(2 * kPi * 30 * t); });
  const Signal out = filter_fft(Signal::sampled(v, 0.01), FilterSpec{10.0, 5.0, 10});
  EXPECT_LE(qdt_demodulate(out, 2 * kPi * 30).amplitude, 0.01);
}

TEST(FilterFft, low_pass_demo_correlates_with_slow_tone) {
  GaussianNoise noise(2024);
  const RealSeq clean = sample(100, 0.01, [](double t) { return std::cos(4 * kPi * t); });
  RealSeq v = sample(100, 0.01, [](double t) { return std::cos(4 * kPi * t) + std::sin(20 * kPi * t); });
  for (double& x : v) x += noise.normal(0.0, 0.5);
  const RealSeq out = filter_fft(Signal::sampled(v, 0.01), FilterSpec{0.0, 3.0, 10}).real();
  EXPECT_GE(oracle::pearson(out, clean), 0.95);
}

TEST(FilterFftProperty, near_ideal_mode_is_idempotent) {
  // Degree 1000 on a band whose edges fall halfway between grid bins: every
  // bin sits either in the flat pass band or where the weight is below
  // 1e-40, so the filter acts as an ideal projection.
  oracle::Gen g(68);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = g.size(16, 64);
    const double ts = 0.01;
    const double df = 1.0 / (n * ts);
    const RealSeq v = g.reals(n);
    const FilterSpec spec{static_cast<double>(g.size(0, n / 2)) * df,
                          (static_cast<double>(g.size(0, 4)) + 0.5) * df, 1000};
    const Signal once = filter_fft(Signal::sampled(v, ts), spec);
    const Signal twice = filter_fft(once, spec);
    EXPECT_LE(oracle::max_abs_diff(twice.real(), once.real()), 1e-9);
  }
}

// ---- acf denoise ----------------------------------------------------------------

TEST(AcfDenoise, noiseless_two_tone_is_unchanged) {
  const RealSeq v = sample(100, 0.01, [](double t) {
    return std::cos(2 * kPi * 2 * t) + std::sin(2 * kPi * 10 * t);
  });
  const RealSeq out = acf_denoise(Signal::sampled(v, 0.01)).real();
  EXPECT_LE(oracle::max_abs_diff(out, v), 1e-6);
}

TEST(AcfDenoise, keeps_exactly_the_tone_bins_at_moderate_noise) {
  // cos(2 pi 2 t) + sin(2 pi 10 t) + N(0, 0.5), Ts = 0.01, N = 100.
  // The amplitude estimate of a surviving bin has a noise sd of ~0.07, so
  // 15 % is a ~2 sd band; it is checked as a rate over the draws.
  int draws = 0, within = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GaussianNoise noise(seed);
    RealSeq v = sample(100, 0.01, [](double t) {
      return std::cos(2 * kPi * 2 * t) + std::sin(2 * kPi * 10 * t);
    });
    for (double& x : v) x += noise.normal(0.0, 0.5);
    const ComplexSeq spectrum = analytic_spectrum(v);
    const RealSeq w = acf_weights(spectrum);
    for (std::size_t m = 1; m < w.size(); ++m) {
      EXPECT_EQ(w[m], (m == 2 || m == 10) ? 1.0 : 0.0) << "seed " << seed << " bin " << m;
    }
    // surviving one-sided amplitudes carry the unit tone amplitudes
    for (std::size_t m : {2u, 10u}) {
      ++draws;
      if (std::abs(std::abs(spectrum[m]) - 1.0) <= 0.15) ++within;
    }
    // and the filtered output is the retained components only
    const RealSeq out = acf_denoise(Signal::sampled(v, 0.01)).real();
    ComplexSeq kept(100, Complex{});
    kept[2] = spectrum[2];
    kept[10] = spectrum[10];
    if (w[0] == 1.0) kept[0] = spectrum[0];
    EXPECT_LE(oracle::max_abs_diff(out, real_part(dft_inverse(kept))), 1e-12);
  }
  EXPECT_GE(within, 36) << within << " of " << draws;
}

TEST(AcfDenoise, pure_noise_loses_energy) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GaussianNoise noise(seed);
    const RealSeq v = noise.normals(128);
    const RealSeq out = acf_denoise(Signal::sampled(v, 0.01)).real();
    EXPECT_LT(energy(out), energy(v)) << "seed " << seed;
  }
}

TEST(AcfDenoiseProperty, scaling_invariance) {
  oracle::Gen g(69);
  for (int c = 0; c < 200; ++c) {
    const std::size_t n = g.size(3, 64);
    const RealSeq v = g.reals(n);
    const double scale = g.uniform(0.01, 100);
    RealSeq sv(v);
    for (double& x : sv) x *= scale;
    const RealSeq a = acf_denoise(Signal::sampled(v, 0.1)).real();
    const RealSeq b = acf_denoise(Signal::sampled(sv, 0.1)).real();
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(b[k], scale * a[k], 1e-9 * std::max(1.0, scale));
  }
}

TEST(AcfDenoise, errors) {
  EXPECT_THROW((void)acf_denoise(Signal::sampled(RealSeq{1, 2}, 0.1)), Error);
  EXPECT_THROW((void)acf_denoise(Signal(RealSeq{0, 1, 3}, RealSeq{1, 2, 3})), Error);
}
