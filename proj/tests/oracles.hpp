// Test-only referees: naive index-formula implementations of every tensor
// contraction, the curl-variable form of the elastic energy, and small
// deterministic random generators. Nothing here reuses the library kernels
// it is checking.
#pragma once

#include <random>

#include "elsim/tensor.hpp"

namespace oracle {

using elsim::Mat3;
using elsim::Ten3;
using elsim::Ten4;
using elsim::Ten5;
using elsim::Ten6;
using elsim::Vec3;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform() {  // [-1, 1)
    return static_cast<double>(eng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
  Vec3 vec() { return {uniform(), uniform(), uniform()}; }
  Mat3 mat() {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = uniform();
    return m;
  }
  Ten3 ten3() {
    Ten3 g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) g.t[i][j][k] = uniform();
    return g;
  }
  Ten4 ten4() {
    Ten4 g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) g.t[i][j][k][l] = uniform();
    return g;
  }
  Ten6 ten6() {
    Ten6 g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m)
              for (int n = 0; n < 3; ++n) g.t[i][j][k][l][m][n] = uniform();
    return g;
  }
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  Vec3 r;
  r[0] = a[1] * b[2] - a[2] * b[1];
  r[1] = a[2] * b[0] - a[0] * b[2];
  r[2] = a[0] * b[1] - a[1] * b[0];
  return r;
}

inline Vec3 ten3_ddot_mat(const Ten3& g, const Mat3& a) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i] += g.t[i][j][k] * a[j][k];
  return r;
}

inline Mat3 ten3_dot_vec(const Ten3& g, const Vec3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += g.t[i][j][k] * a[k];
  return r;
}

inline Ten3 ten3_dot_mat(const Ten3& g, const Mat3& a) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        for (int k = 0; k < 3; ++k) r.t[i][j][l] += g.t[i][j][k] * a[k][l];
  return r;
}

inline Mat3 ten4_ddot_mat(const Ten4& t, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r[i][j] += t.t[i][j][k][l] * a[k][l];
  return r;
}

inline Ten3 ten4_dot_vec(const Ten4& t, const Vec3& a) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r.t[i][j][k] += t.t[i][j][k][l] * a[l];
  return r;
}

inline Ten3 ten4_ddot_ten3(const Ten4& t, const Ten3& g) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            r.t[i][j][m] += t.t[i][j][k][l] * g.t[k][l][m];
  return r;
}

inline Vec3 ten4_tdot_ten3(const Ten4& t, const Ten3& g) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) r[i] += t.t[i][j][k][l] * g.t[j][k][l];
  return r;
}

inline Ten4 mat_ddot_ten6(const Mat3& a, const Ten6& th) {
  Ten4 r;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              r.t[k][l][m][n] += a[i][j] * th.t[i][j][k][l][m][n];
  return r;
}

inline Ten3 ten6_tdot_ten3(const Ten6& th, const Ten3& g) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
              r.t[i][j][k] += th.t[i][j][k][l][m][n] * g.t[l][m][n];
  return r;
}

inline Ten5 vec_dot_ten6(const Vec3& a, const Ten6& th) {
  Ten5 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
              r.t[i][j][l][m][n] += a[k] * th.t[i][j][k][l][m][n];
  return r;
}

inline double ten3_tdot_ten3(const Ten3& a, const Ten3& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += a.t[i][j][k] * b.t[i][j][k];
  return s;
}

// elastic energy in curl variables, straight from the split-constant form
// with c = 2 vee(S_skw) standing in for curl d:
//   2F = k1 tr^2 + k2 |c|^2 + k3 |h|^2 tr^2 + k4 (h.c)^2 + k5 |h x c|^2
inline double frank_energy_curl_form(double k1, double k2, double k3,
                                     double k4, double k5, const Vec3& h,
                                     const Mat3& S) {
  const double tr = S[0][0] + S[1][1] + S[2][2];
  Vec3 c;
  c[0] = S[2][1] - S[1][2];
  c[1] = S[0][2] - S[2][0];
  c[2] = S[1][0] - S[0][1];
  const double h2 = h[0] * h[0] + h[1] * h[1] + h[2] * h[2];
  const double c2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
  const double hc = h[0] * c[0] + h[1] * c[1] + h[2] * c[2];
  const Vec3 hxc = oracle::cross(h, c);
  const double hxc2 = hxc[0] * hxc[0] + hxc[1] * hxc[1] + hxc[2] * hxc[2];
  return 0.5 * (k1 * tr * tr + k2 * c2 + k3 * h2 * tr * tr + k4 * hc * hc +
                k5 * hxc2);
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / (std::abs(want) + 1e-300);
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

inline double max_abs_diff(const Vec3& a, const Vec3& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const Ten3& a, const Ten3& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        m = std::max(m, std::abs(a.t[i][j][k] - b.t[i][j][k]));
  return m;
}

inline double max_abs(const Ten3& a) {
  Ten3 z;
  return max_abs_diff(a, z);
}

}  // namespace oracle
