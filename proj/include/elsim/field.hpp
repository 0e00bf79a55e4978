// Spectral and physical field containers plus the spectral calculus:
// derivatives as ik-multipliers (Nyquist zeroed so differentiation stays
// skew-adjoint for the grid inner product), Leray projection, mode-ball
// truncation, pointwise product evaluation and the two quadratures
// (coefficient-space Parseval and physical-grid mean).
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "elsim/fft.hpp"
#include "elsim/grid.hpp"
#include "elsim/tensor.hpp"

namespace elsim {

template <int C>
struct SpecField {
  TorusGrid g;
  std::vector<std::complex<double>> a;  // component-major, C * spec_size

  SpecField() = default;
  explicit SpecField(const TorusGrid& grid)
      : g(grid), a(C * grid.spec_size()) {}

  std::complex<double>* comp(int c) { return a.data() + c * g.spec_size(); }
  const std::complex<double>* comp(int c) const {
    return a.data() + c * g.spec_size();
  }
  std::complex<double>& at(int c, std::size_t i) {
    return a[c * g.spec_size() + i];
  }
  std::complex<double> at(int c, std::size_t i) const {
    return a[c * g.spec_size() + i];
  }
  void set_zero() { std::fill(a.begin(), a.end(), std::complex<double>(0)); }
};

template <int C>
struct PhysField {
  TorusGrid g;
  std::vector<double> a;  // component-major, C * phys_size

  PhysField() = default;
  explicit PhysField(const TorusGrid& grid)
      : g(grid), a(C * grid.phys_size()) {}

  double* comp(int c) { return a.data() + c * g.phys_size(); }
  const double* comp(int c) const { return a.data() + c * g.phys_size(); }
  double& at(int c, std::size_t i) { return a[c * g.phys_size() + i]; }
  double at(int c, std::size_t i) const { return a[c * g.phys_size() + i]; }

  Vec3 vec_at(std::size_t i) const {
    static_assert(C == 3);
    const std::size_t n = g.phys_size();
    return {a[i], a[n + i], a[2 * n + i]};
  }
  void set_vec(std::size_t i, const Vec3& v) {
    static_assert(C == 3);
    const std::size_t n = g.phys_size();
    a[i] = v[0];
    a[n + i] = v[1];
    a[2 * n + i] = v[2];
  }
  Mat3 mat_at(std::size_t i) const {
    static_assert(C == 9);
    const std::size_t n = g.phys_size();
    Mat3 r;
    for (int c = 0; c < 9; ++c) r[c / 3][c % 3] = a[c * n + i];
    return r;
  }
  void set_mat(std::size_t i, const Mat3& m) {
    static_assert(C == 9);
    const std::size_t n = g.phys_size();
    for (int c = 0; c < 9; ++c) a[c * n + i] = m[c / 3][c % 3];
  }
  Ten3 ten3_at(std::size_t i) const {
    static_assert(C == 27);
    const std::size_t n = g.phys_size();
    Ten3 r;
    for (int c = 0; c < 27; ++c)
      r.t[c / 9][(c / 3) % 3][c % 3] = a[c * n + i];
    return r;
  }
};

using SpecScalar = SpecField<1>;
using SpecVec = SpecField<3>;
using SpecMat = SpecField<9>;
using PhysScalar = PhysField<1>;
using PhysVec = PhysField<3>;
using PhysMat = PhysField<9>;
using PhysTen3 = PhysField<27>;

// ---- transforms ----

template <int C>
PhysField<C> to_phys(const SpecField<C>& f) {
  PhysField<C> out(f.g);
  for (int c = 0; c < C; ++c) fft::c2r(f.g, f.comp(c), out.comp(c));
  return out;
}

template <int C>
SpecField<C> to_spec(const PhysField<C>& f) {
  SpecField<C> out(f.g);
  for (int c = 0; c < C; ++c) fft::r2c(f.g, f.comp(c), out.comp(c));
  return out;
}

// ---- calculus (header-declared, defined in field.cpp) ----

SpecVec grad(const SpecScalar& f);
SpecMat grad(const SpecVec& f);            // (grad d)_ab = d_a,b at comp 3a+b
SpecField<27> hessian(const SpecVec& f);   // G_ijk = d_i,jk at comp 9i+3j+k
SpecScalar divergence(const SpecVec& f);
SpecVec divergence(const SpecMat& f);      // (div A)_i = A_ij,j
SpecVec curl(const SpecVec& f);
SpecMat grad_laplacian(const SpecVec& f);  // (grad lap d)_ik = (lap d_i),k

template <int C>
SpecField<C> laplacian(const SpecField<C>& f);
template <int C>
SpecField<C> bilaplacian(const SpecField<C>& f);

// v(k) <- (I - k k^T/|k|^2) v(k); the mean mode is untouched
void leray_project(SpecVec& f);
SpecVec leray_projected(const SpecVec& f);

// zero every coefficient with |m| > radius (Euclidean mode ball)
template <int C>
void truncate(SpecField<C>& f, int radius);
template <int C>
SpecField<C> truncated(const SpecField<C>& f, int radius);

// symmetrize the self-conjugate kz planes so synthesis yields a real field
template <int C>
void hermitian_fix(SpecField<C>& f);

void zero_mean(SpecVec& f);

// max_k |k . v(k)|, the divergence-free defect in coefficient space
double divergence_max(const SpecVec& f);

// ---- quadrature and inner products ----

// Parseval: integral of f*g over the box from coefficients
template <int C>
double l2_inner(const SpecField<C>& f, const SpecField<C>& h);
template <int C>
double l2_norm2(const SpecField<C>& f);

// physical-grid trapezoid quadrature: mean * volume
double integral(const PhysScalar& f);
template <int C>
double grid_inner(const PhysField<C>& f, const PhysField<C>& h);
template <int C>
double grid_norm2(const PhysField<C>& f);
template <int C>
double max_abs(const PhysField<C>& f);

// ---- pointwise evaluation ----

Vec3 node_position(const TorusGrid& g, std::size_t i);

template <int CO, typename F>
PhysField<CO> map_nodes(const TorusGrid& g, F&& fn) {
  PhysField<CO> out(g);
  const std::size_t n = g.phys_size();
  for (std::size_t i = 0; i < n; ++i) {
    auto r = fn(i);
    if constexpr (CO == 1) {
      out.a[i] = r;
    } else if constexpr (CO == 3) {
      out.set_vec(i, r);
    } else if constexpr (CO == 9) {
      out.set_mat(i, r);
    } else {
      static_assert(CO == 1 || CO == 3 || CO == 9, "unsupported width");
    }
    (void)n;
  }
  return out;
}

// product of two band-limited fields evaluated on the grid and truncated to
// the dealias radius; alias-free for quadratic products under the 2/3 rule
SpecScalar dealiased_product(const SpecScalar& f, const SpecScalar& h);

// copy coefficients between resolutions (modes present in both are kept)
template <int C>
SpecField<C> resample(const SpecField<C>& f, const TorusGrid& dst);

}  // namespace elsim
