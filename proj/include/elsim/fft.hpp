// Thin FFTW3 wrapper with a per-size plan cache. Coefficients follow the
// analysis convention f(x) = sum_m c(m) exp(i k.x), so c2r is plain synthesis
// and r2c divides by N^3. Plans are created once under a lock and executed
// through the new-array interface, which is safe to call concurrently.
#pragma once

#include <complex>

#include "elsim/grid.hpp"

namespace elsim::fft {

// half-complex -> real synthesis; `in` is copied internally (FFTW's c2r
// destroys its input)
void c2r(const TorusGrid& g, const std::complex<double>* in, double* out);

// real -> half-complex analysis, normalized by 1/N^3
void r2c(const TorusGrid& g, const double* in, std::complex<double>* out);

}  // namespace elsim::fft
