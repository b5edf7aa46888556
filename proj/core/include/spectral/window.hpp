#pragma once

#include <cstddef>
#include <span>

#include "spectral/signal.hpp"

namespace spectral {

// Tukey (tapered cosine) window evaluated at arbitrary positions.
//
// Positions are normalized to u in [0, 1] over their range. The fraction
// `alpha` at each end rises (falls) as sin^2(pi/2 * u/alpha), a quarter cycle
// of a cosine, and the middle is flat at 1. alpha must lie in (0, 1]; when
// alpha > 0.5 the two tapers meet and the window takes the smaller of both.
RealSeq window_tukey(std::span<const double> positions, double alpha);

// Symmetric Hamming window 0.54 - 0.46 cos(2 pi k / (n-1)); n = 1 gives {1}.
RealSeq window_hamming(std::size_t n);

// Symmetric Blackman window
// 0.42 - 0.5 cos(2 pi k / (n-1)) + 0.08 cos(4 pi k / (n-1)); n = 1 gives {1}.
RealSeq window_blackman(std::size_t n);

}  // namespace spectral
