// Fixed-dimension (d=3) tensor algebra: vectors, matrices and tensors of
// order 3/4/5/6 with the contraction zoo used by the director elasticity
// kernels. Everything here is a pure value-type function, safe to call
// concurrently.
#pragma once

#include <array>
#include <cmath>

namespace elsim {

struct Vec3 {
  double v[3]{0.0, 0.0, 0.0};

  Vec3() = default;
  Vec3(double a, double b, double c) : v{a, b, c} {}

  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }
};

struct Mat3 {
  double m[3][3]{};

  Mat3() = default;
  Mat3(double a00, double a01, double a02,
       double a10, double a11, double a12,
       double a20, double a21, double a22)
      : m{{a00, a01, a02}, {a10, a11, a12}, {a20, a21, a22}} {}

  double* operator[](int i) { return m[i]; }
  const double* operator[](int i) const { return m[i]; }

  static Mat3 identity() { return Mat3(1, 0, 0, 0, 1, 0, 0, 0, 1); }
};

struct Ten3 {
  double t[3][3][3]{};
};

struct Ten4 {
  double t[3][3][3][3]{};
};

struct Ten5 {
  double t[3][3][3][3][3]{};
};

struct Ten6 {
  double t[3][3][3][3][3][3]{};
};

// ---- Vec3 arithmetic ----

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// ---- Mat3 arithmetic ----

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}
inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = s * a[i][j];
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

inline Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      double s = 0;
      for (int j = 0; j < 3; ++j) s += a[i][j] * b[j][k];
      r[i][k] = s;
    }
  return r;
}

inline Vec3 matvec(const Mat3& a, const Vec3& x) {
  return {a[0][0] * x[0] + a[0][1] * x[1] + a[0][2] * x[2],
          a[1][0] * x[0] + a[1][1] * x[1] + a[1][2] * x[2],
          a[2][0] * x[0] + a[2][1] * x[1] + a[2][2] * x[2]};
}

inline double trace(const Mat3& a) { return a[0][0] + a[1][1] + a[2][2]; }

// Frobenius product A:B.
inline double ddot(const Mat3& a, const Mat3& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i][j] * b[i][j];
  return s;
}
inline double norm2(const Mat3& a) { return ddot(a, a); }

inline Mat3 sym(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = 0.5 * (a[i][j] + a[j][i]);
  return r;
}
inline Mat3 skw(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = 0.5 * (a[i][j] - a[j][i]);
  return r;
}
inline std::array<Mat3, 2> sym_skw(const Mat3& a) { return {sym(a), skw(a)}; }

inline Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i] * b[j];
  return r;
}

// A ⊗ a: (A⊗a)_ijk = A_ij a_k.
inline Ten3 outer(const Mat3& a, const Vec3& b) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r.t[i][j][k] = a[i][j] * b[k];
  return r;
}

// ---- skew map and its left inverse ----

// hat(a) b = a × b.
inline Mat3 hat(const Vec3& a) {
  return Mat3(0, -a[2], a[1],
              a[2], 0, -a[0],
              -a[1], a[0], 0);
}

// Reads the (3,2),(1,3),(2,1) slots; vee(hat(a)) = a.
inline Vec3 vee(const Mat3& a) { return {a[2][1], a[0][2], a[1][0]}; }

// ---- order-3 tensor contractions ----

inline double norm2(const Ten3& g) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += g.t[i][j][k] * g.t[i][j][k];
  return s;
}

// Γ ⋮ Υ
inline double ten3_tdot_ten3(const Ten3& a, const Ten3& b) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += a.t[i][j][k] * b.t[i][j][k];
  return s;
}

// (Γ : A)_i = Γ_ijk A_jk
inline Vec3 ten3_ddot_mat(const Ten3& g, const Mat3& a) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double s = 0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += g.t[i][j][k] * a[j][k];
    r[i] = s;
  }
  return r;
}

// (Γ · a)_ij = Γ_ijk a_k
inline Mat3 ten3_dot_vec(const Ten3& g, const Vec3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = g.t[i][j][0] * a[0] + g.t[i][j][1] * a[1] + g.t[i][j][2] * a[2];
  return r;
}

// (Γ · A)_ijl = Γ_ijk A_kl
inline Ten3 ten3_dot_mat(const Ten3& g, const Mat3& a) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += g.t[i][j][k] * a[k][l];
        r.t[i][j][l] = s;
      }
  return r;
}

// (a ·₁ Γ)_jk = a_i Γ_ijk, contraction over the first slot (used for Δd·∇²d).
inline Mat3 vec_dot_ten3_first(const Vec3& a, const Ten3& g) {
  Mat3 r;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      r[j][k] = a[0] * g.t[0][j][k] + a[1] * g.t[1][j][k] + a[2] * g.t[2][j][k];
  return r;
}

// ---- order-4 tensor contractions ----

// (Λ : A)_ij = Λ_ijkl A_kl
inline Mat3 ten4_ddot_mat(const Ten4& l, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) s += l.t[i][j][k][m] * a[k][m];
      r[i][j] = s;
    }
  return r;
}

// (Λ : a)_ijk = Λ_ijkl a_l
inline Ten3 ten4_dot_vec(const Ten4& l, const Vec3& a) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r.t[i][j][k] = l.t[i][j][k][0] * a[0] + l.t[i][j][k][1] * a[1] +
                       l.t[i][j][k][2] * a[2];
  return r;
}

// (Λ : Γ)_ijm = Λ_ijkl Γ_klm
inline Ten3 ten4_ddot_ten3(const Ten4& l, const Ten3& g) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        double s = 0;
        for (int k = 0; k < 3; ++k)
          for (int n = 0; n < 3; ++n) s += l.t[i][j][k][n] * g.t[k][n][m];
        r.t[i][j][m] = s;
      }
  return r;
}

// (Λ ⋮ Γ)_i = Λ_ijkl Γ_jkl
inline Vec3 ten4_tdot_ten3(const Ten4& l, const Ten3& g) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    double s = 0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) s += l.t[i][j][k][m] * g.t[j][k][m];
    r[i] = s;
  }
  return r;
}

// ---- order-6 tensor contractions ----

// (A : Θ)_klmn = A_ij Θ_ijklmn
inline Ten4 mat_ddot_ten6(const Mat3& a, const Ten6& th) {
  Ten4 r;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
          double s = 0;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += a[i][j] * th.t[i][j][k][l][m][n];
          r.t[k][l][m][n] = s;
        }
  return r;
}

// (Θ ⋮ Γ)_ijk = Θ_ijklmn Γ_lmn
inline Ten3 ten6_tdot_ten3(const Ten6& th, const Ten3& g) {
  Ten3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0;
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
              s += th.t[i][j][k][l][m][n] * g.t[l][m][n];
        r.t[i][j][k] = s;
      }
  return r;
}

// (a · Θ)_ijlmn = a_k Θ_ijklmn, contraction over the third slot.
inline Ten5 vec_dot_ten6(const Vec3& a, const Ten6& th) {
  Ten5 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          for (int n = 0; n < 3; ++n)
            r.t[i][j][l][m][n] = a[0] * th.t[i][j][0][l][m][n] +
                                 a[1] * th.t[i][j][1][l][m][n] +
                                 a[2] * th.t[i][j][2][l][m][n];
  return r;
}

// Levi-Civita tensor Υ; (a × b)_i = (Υ : (a ⊗ b))_i.
inline const Ten3& levi_civita() {
  static const Ten3 eps = [] {
    Ten3 e;
    e.t[0][1][2] = e.t[1][2][0] = e.t[2][0][1] = 1.0;
    e.t[0][2][1] = e.t[1][0][2] = e.t[2][1][0] = -1.0;
    return e;
  }();
  return eps;
}

inline bool all_finite(const Vec3& a) {
  return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]);
}
inline bool all_finite(const Mat3& a) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!std::isfinite(a[i][j])) return false;
  return true;
}

}  // namespace elsim
