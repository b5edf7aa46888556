#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "spectral/signal.hpp"

namespace spectral {

enum class Direction { forward, inverse };

// Unnormalized complex FFT for any length N >= 1.
//
// Lengths whose prime factors are all small run through a recursive
// mixed-radix Cooley-Tukey decomposition (radix 4, 2, 3 and a generic odd
// radix). Lengths with a prime factor above kMaxDirectRadix go through
// Bluestein's chirp-z algorithm on a power-of-two convolution, so every N is
// O(N log N).
//
// forward:  X[m] = sum_n x[n] e^{-2 pi i m n / N}
// inverse:  x[n] = sum_m X[m] e^{+2 pi i m n / N}
//
// A plan is immutable once built; execute() may be called concurrently.
class FftPlan {
 public:
  static constexpr std::size_t kMaxDirectRadix = 31;

  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const { return n_; }
  bool uses_bluestein() const { return bluestein_ != nullptr; }
  const std::vector<std::size_t>& factors() const { return factors_; }

  void execute(std::span<Complex> data, Direction dir) const;

 private:
  struct Bluestein;

  void forward_mixed_radix(std::span<Complex> data) const;
  void work(Complex* out, const Complex* in, std::size_t fstride,
            std::size_t factor_index, std::vector<Complex>& scratch) const;
  void butterfly(Complex* out, std::size_t fstride, std::size_t radix,
                 std::size_t m, std::vector<Complex>& scratch) const;

  std::size_t n_;
  std::vector<std::size_t> factors_;  // radices, outermost first
  std::vector<Complex> twiddles_;     // e^{-2 pi i k / n}
  std::unique_ptr<Bluestein> bluestein_;
};

// Shared, lazily built plan for length n. Thread-safe.
std::shared_ptr<const FftPlan> fft_plan(std::size_t n);

// In-place unnormalized transform using the shared plan cache.
void fft(std::span<Complex> data, Direction dir);

}  // namespace spectral
