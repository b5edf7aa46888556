#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spectral/noise.hpp"

using spectral::GaussianNoise;

TEST(Noise, deterministic_per_seed) {
  GaussianNoise a(42), b(42);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.normal(), b.normal());
  EXPECT_NE(GaussianNoise(42).normal(), GaussianNoise(43).normal());
}

TEST(Noise, uniform_stream_is_top_53_bits_of_mt19937_64) {
  std::mt19937_64 ref(7);
  GaussianNoise g(7);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(g.uniform(), static_cast<double>(ref() >> 11) * 0x1.0p-53);
}

TEST(Noise, first_normal_is_box_muller_cos_branch) {
  std::mt19937_64 ref(9);
  const double u1 = 1.0 - static_cast<double>(ref() >> 11) * 0x1.0p-53;
  const double u2 = static_cast<double>(ref() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  GaussianNoise g(9);
  EXPECT_EQ(g.normal(), r * std::cos(2.0 * std::numbers::pi * u2));
  EXPECT_EQ(g.normal(), r * std::sin(2.0 * std::numbers::pi * u2));
}

TEST(Noise, moments) {
  GaussianNoise g(1);
  const auto v = g.normals(200000, 1.0, 0.5);
  double m = 0, s = 0;
  for (double x : v) m += x;
  m /= v.size();
  for (double x : v) s += (x - m) * (x - m);
  s = std::sqrt(s / (v.size() - 1));
  EXPECT_NEAR(m, 1.0, 0.01);
  EXPECT_NEAR(s, 0.5, 0.01);
  EXPECT_THROW((void)g.normal(0, -1), std::exception);
}
