#pragma once

#include "spectral/analytic.hpp"
#include "spectral/error.hpp"
#include "spectral/examples.hpp"
#include "spectral/fft.hpp"
#include "spectral/filtering.hpp"
#include "spectral/lomb.hpp"
#include "spectral/noise.hpp"
#include "spectral/qdt.hpp"
#include "spectral/signal.hpp"
#include "spectral/transform.hpp"
#include "spectral/waterfall.hpp"
#include "spectral/window.hpp"
