#pragma once

#include "spectral/signal.hpp"

namespace spectral {

struct QdtResult {
  double amplitude = 0.0;
  double phase = 0.0;  // radians, (-pi, pi]
};

// Quadrature demodulation at angular frequency omega0 (rad per position unit):
//
//   R = (1/N) sum s_n cos(omega0 t_n),  I = (1/N) sum s_n sin(omega0 t_n)
//   A = 2 sqrt(R^2 + I^2),              phi = atan2(I, R)
//
// With these sums a component A cos(omega0 t - phi) yields (A, phi).
// Exact when omega0 completes an integer number of periods over the window;
// otherwise the result carries the truncation residue of the finite window.
// Requires a real, uniform signal with at least two samples.
QdtResult qdt_demodulate(const Signal& signal, double omega0);

}  // namespace spectral
