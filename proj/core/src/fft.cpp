#include "spectral/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "spectral/error.hpp"

namespace spectral {

namespace {

std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> out;
  while (n % 4 == 0) {
    out.push_back(4);
    n /= 4;
  }
  if (n % 2 == 0) {
    out.push_back(2);
    n /= 2;
  }
  for (std::size_t p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// e^{-2 pi i k / n}, with k reduced so the argument stays in [0, 2 pi).
Complex unit_root(std::size_t k, std::size_t n) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(k % n) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

struct FftPlan::Bluestein {
  std::size_t m = 0;
  std::unique_ptr<FftPlan> inner;
  ComplexSeq chirp;           // e^{-i pi k^2 / n}
  ComplexSeq kernel_spectrum; // FFT_m of conj(chirp), wrapped
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw Error("empty signal");
  factors_ = factorize(n);
  bool direct = true;
  for (auto p : factors_) {
    if (p > kMaxDirectRadix) direct = false;
  }
  if (direct) {
    twiddles_.resize(n);
    for (std::size_t k = 0; k < n; ++k) twiddles_[k] = unit_root(k, n);
    return;
  }

  bluestein_ = std::make_unique<Bluestein>();
  auto& b = *bluestein_;
  b.m = next_pow2(2 * n - 1);
  b.inner = std::make_unique<FftPlan>(b.m);
  b.chirp.resize(n);
  const std::size_t two_n = 2 * n;
  // k^2 mod 2n keeps the phase argument small for large k; it is advanced
  // incrementally via (k + 1)^2 = k^2 + 2k + 1 to stay within size_t.
  std::size_t k2 = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) k2 = (k2 + (2 * (k - 1) + 1) % two_n) % two_n;
    const double angle =
        -std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    b.chirp[k] = {std::cos(angle), std::sin(angle)};
  }
  b.kernel_spectrum.assign(b.m, Complex{});
  b.kernel_spectrum[0] = std::conj(b.chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    b.kernel_spectrum[k] = std::conj(b.chirp[k]);
    b.kernel_spectrum[b.m - k] = std::conj(b.chirp[k]);
  }
  b.inner->execute(b.kernel_spectrum, Direction::forward);
}

FftPlan::~FftPlan() = default;

void FftPlan::execute(std::span<Complex> data, Direction dir) const {
  if (data.size() != n_) throw Error("fft: buffer length does not match plan");
  if (n_ == 1) return;
  // inverse(x) = conj(forward(conj(x)))
  if (dir == Direction::inverse) {
    for (auto& v : data) v = std::conj(v);
  }
  if (bluestein_) {
    const auto& b = *bluestein_;
    ComplexSeq work_buf(b.m, Complex{});
    for (std::size_t k = 0; k < n_; ++k) work_buf[k] = data[k] * b.chirp[k];
    b.inner->execute(work_buf, Direction::forward);
    for (std::size_t k = 0; k < b.m; ++k) work_buf[k] *= b.kernel_spectrum[k];
    b.inner->execute(work_buf, Direction::inverse);
    const double scale = 1.0 / static_cast<double>(b.m);
    for (std::size_t k = 0; k < n_; ++k) {
      data[k] = work_buf[k] * scale * b.chirp[k];
    }
  } else {
    forward_mixed_radix(data);
  }
  if (dir == Direction::inverse) {
    for (auto& v : data) v = std::conj(v);
  }
}

void FftPlan::forward_mixed_radix(std::span<Complex> data) const {
  ComplexSeq input(data.begin(), data.end());
  std::vector<Complex> scratch;
  work(data.data(), input.data(), 1, 0, scratch);
}

// Decimation in time: the stage at factor_index splits the current length
// (radix * m) into `radix` interleaved sub-sequences of length m, transforms
// each recursively into consecutive blocks of `out`, then combines them.
void FftPlan::work(Complex* out, const Complex* in, std::size_t fstride,
                   std::size_t factor_index,
                   std::vector<Complex>& scratch) const {
  const std::size_t radix = factors_[factor_index];
  std::size_t m = 1;
  for (std::size_t i = factor_index + 1; i < factors_.size(); ++i) {
    m *= factors_[i];
  }
  if (m == 1) {
    for (std::size_t q = 0; q < radix; ++q) out[q] = in[q * fstride];
  } else {
    for (std::size_t q = 0; q < radix; ++q) {
      work(out + q * m, in + q * fstride, fstride * radix, factor_index + 1,
           scratch);
    }
  }
  butterfly(out, fstride, radix, m, scratch);
}

void FftPlan::butterfly(Complex* out, std::size_t fstride, std::size_t radix,
                        std::size_t m, std::vector<Complex>& scratch) const {
  const Complex* tw = twiddles_.data();
  switch (radix) {
    case 2: {
      for (std::size_t u = 0; u < m; ++u) {
        const Complex t = out[u + m] * tw[u * fstride];
        out[u + m] = out[u] - t;
        out[u] += t;
      }
      return;
    }
    case 4: {
      for (std::size_t u = 0; u < m; ++u) {
        const Complex a0 = out[u];
        const Complex a1 = out[u + m] * tw[u * fstride];
        const Complex a2 = out[u + 2 * m] * tw[2 * u * fstride];
        const Complex a3 = out[u + 3 * m] * tw[3 * u * fstride];
        const Complex s02 = a0 + a2;
        const Complex d02 = a0 - a2;
        const Complex s13 = a1 + a3;
        const Complex d13 = a1 - a3;
        // -i * d13 for the forward direction
        const Complex rot{d13.imag(), -d13.real()};
        out[u] = s02 + s13;
        out[u + m] = d02 + rot;
        out[u + 2 * m] = s02 - s13;
        out[u + 3 * m] = d02 - rot;
      }
      return;
    }
    case 3: {
      const Complex w1 = tw[fstride * m];  // e^{-2 pi i / 3}
      for (std::size_t u = 0; u < m; ++u) {
        const Complex a0 = out[u];
        const Complex a1 = out[u + m] * tw[u * fstride];
        const Complex a2 = out[u + 2 * m] * tw[2 * u * fstride];
        const Complex s = a1 + a2;
        const Complex d = a1 - a2;
        const Complex half = a0 - 0.5 * s;
        const Complex rot{-w1.imag() * d.imag(), w1.imag() * d.real()};
        out[u] = a0 + s;
        out[u + m] = half + rot;
        out[u + 2 * m] = half - rot;
      }
      return;
    }
    default:
      break;
  }

  // Generic radix, O(radix^2) per group.
  const std::size_t n = n_;
  scratch.resize(radix);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t q = 0; q < radix; ++q) {
      scratch[q] = out[u + q * m] * tw[(q * u * fstride) % n];
    }
    for (std::size_t q1 = 0; q1 < radix; ++q1) {
      Complex acc = scratch[0];
      const std::size_t step = q1 * m * fstride;  // (q1 * m) * fstride
      std::size_t idx = 0;
      for (std::size_t q = 1; q < radix; ++q) {
        idx += step;
        idx %= n;
        acc += scratch[q] * tw[idx];
      }
      out[u + q1 * m] = acc;
    }
  }
}

std::shared_ptr<const FftPlan> fft_plan(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const FftPlan>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto plan = std::make_shared<const FftPlan>(n);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(plan));
  return it->second;
}

void fft(std::span<Complex> data, Direction dir) {
  fft_plan(data.size())->execute(data, dir);
}

}  // namespace spectral
