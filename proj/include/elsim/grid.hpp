// Uniform periodic grid on [0,L)^3 with the r2c spectral layout conventions
// used throughout: x is the slowest axis, the z frequency axis is halved,
// integer modes m are mapped to physical wavenumbers k = (2*pi/L) m.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace elsim {

inline constexpr double two_pi = 6.283185307179586476925286766559;

struct TorusGrid {
  int N = 0;
  double L = two_pi;
  int cutoff = 0;  // 2/3-rule dealias radius, also the default Galerkin index

  TorusGrid() = default;
  explicit TorusGrid(int N_, double L_ = two_pi) : N(N_), L(L_) {
    if (N < 8 || N % 2 != 0)
      throw std::invalid_argument("grid N must be even and >= 8");
    if (!(L > 0)) throw std::invalid_argument("grid L must be positive");
    cutoff = N / 3;
  }

  int nk() const { return N / 2 + 1; }
  std::size_t spec_size() const {
    return static_cast<std::size_t>(N) * N * nk();
  }
  std::size_t phys_size() const {
    return static_cast<std::size_t>(N) * N * N;
  }

  // signed integer mode for a full-range index
  int mode(int idx) const { return idx <= N / 2 ? idx : idx - N; }
  double kscale() const { return two_pi / L; }
  double volume() const { return L * L * L; }
  double dx() const { return L / N; }

  std::size_t spec_index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * N + iy) * nk() + iz;
  }
  std::size_t phys_index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * N + iy) * N + iz;
  }

  bool same_as(const TorusGrid& o) const { return N == o.N && L == o.L; }
};

}  // namespace elsim
