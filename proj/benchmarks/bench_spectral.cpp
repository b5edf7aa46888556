#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "spectral/spectral.hpp"

namespace {

using namespace spectral;

RealSeq noise(std::size_t n, std::uint64_t seed) { return GaussianNoise(seed).normals(n); }

// Powers of two, composite mixed radix and primes (Bluestein).
void BM_dft_forward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexSeq x = to_complex(noise(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(dft_forward(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_dft_forward)->Arg(64)->Arg(1024)->Arg(4096)->Arg(1000)->Arg(3600)->Arg(1009)->Arg(4099);

void BM_poly_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealSeq a = noise(n + 1, 2), b = noise(n + 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(poly_multiply(a, b));
}
BENCHMARK(BM_poly_multiply)->Arg(8)->Arg(64)->Arg(1024);

RealSeq irregular_positions(std::size_t n) {
  GaussianNoise g(4);
  RealSeq x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = (static_cast<double>(k) + 0.4 * g.uniform()) / n;
  return x;
}

RealSeq lomb_grid() {
  RealSeq f;
  for (int k = 1; k <= 250; ++k) f.push_back(0.1 * k);
  return f;
}

void BM_lomb_naive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Signal s(irregular_positions(n), noise(n, 5));
  const RealSeq f = lomb_grid();
  for (auto _ : state) benchmark::DoNotOptimize(lomb_scargle(s, f));
}
BENCHMARK(BM_lomb_naive)->Arg(100)->Arg(1000);

void BM_lomb_fast(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Signal s(irregular_positions(n), noise(n, 5));
  const RealSeq f = lomb_grid();
  for (auto _ : state) benchmark::DoNotOptimize(lomb_scargle_fast(s, f));
}
BENCHMARK(BM_lomb_fast)->Arg(100)->Arg(1000);

void BM_waterfall(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Signal s = make_example("two-burst", ExampleParams{1.0 / n, {}, {}});
  for (auto _ : state) benchmark::DoNotOptimize(waterfall(s));
}
BENCHMARK(BM_waterfall)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_filter_fft(benchmark::State& state) {
  const Signal s = Signal::sampled(noise(static_cast<std::size_t>(state.range(0)), 6), 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(filter_fft(s, FilterSpec{10.0, 3.0, 10}));
}
BENCHMARK(BM_filter_fft)->Arg(1000)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
