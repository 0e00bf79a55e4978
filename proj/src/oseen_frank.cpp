#include "elsim/oseen_frank.hpp"

#include <algorithm>
#include <cmath>

namespace elsim {

namespace {
inline double kron(int i, int j) { return i == j ? 1.0 : 0.0; }
}  // namespace

void FrankConstants::derive() {
  if (split == SplitMode::min_split) {
    k1 = 0.5 * K1;
    k3 = 0.5 * K1;
    k2 = 0.5 * std::min(K2, K3);
    k4 = K2 - k2;
    k5 = K3 - k2;
  } else {
    const double k = 0.5 * std::min({K1, K2, K3});
    k1 = k;
    k2 = k;
    k3 = K1 - k;
    k4 = K2 - k;
    k5 = K3 - k;
  }
  Lambda = build_Lambda(k1, k2);
  Theta = build_Theta(k3, k4, k5);
}

Ten4 build_Lambda(double k1, double k2) {
  Ten4 L;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          L.t[i][j][k][l] = k1 * kron(i, j) * kron(k, l) +
                            k2 * (kron(i, k) * kron(j, l) -
                                  kron(i, l) * kron(j, k));
  return L;
}

Ten6 build_Theta(double k3, double k4, double k5) {
  Ten6 Th;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
              double v = k3 * kron(i, j) * kron(l, m) * kron(k, n);
              v += k5 * (kron(i, l) * kron(m, n) * kron(j, k) -
                         kron(m, i) * kron(l, n) * kron(j, k) -
                         kron(l, j) * kron(m, n) * kron(i, k) +
                         kron(j, m) * kron(l, n) * kron(i, k));
              v += k4 * (kron(k, n) * kron(j, m) * kron(i, l) +
                         kron(k, m) * kron(j, l) * kron(i, n) +
                         kron(k, l) * kron(j, n) * kron(i, m) -
                         kron(k, n) * kron(j, l) * kron(i, m) -
                         kron(k, m) * kron(j, n) * kron(i, l) -
                         kron(k, l) * kron(j, m) * kron(i, n));
              Th.t[i][j][k][l][m][n] = v;
            }
  return Th;
}

FrankTerms energy_terms(const FrankConstants& c, const Vec3& h, const Mat3& S) {
  const double tr = trace(S);
  const Mat3 W = skw(S);
  const Vec3 Wh = matvec(W, h);
  const double hW = ddot(hat(h), W);

  FrankTerms out;
  out.t1 = 0.5 * c.k1 * tr * tr;
  out.t2 = c.k2 * norm2(W);
  out.t3 = 0.5 * c.k3 * norm2(h) * tr * tr;
  out.t4 = 0.5 * c.k4 * hW * hW;
  out.t5 = 2.0 * c.k5 * norm2(Wh);
  return out;
}

double energy_density(const FrankConstants& c, const Vec3& h, const Mat3& S) {
  return energy_terms(c, h, S).total();
}

double energy_density_tensor_form(const FrankConstants& c, const Vec3& h,
                                  const Mat3& S) {
  const double quad = ddot(S, ten4_ddot_mat(c.Lambda, S));
  const Ten3 Sh = outer(S, h);
  const double sext = ten3_tdot_ten3(Sh, ten6_tdot_ten3(c.Theta, Sh));
  return 0.5 * (quad + sext);
}

Mat3 energy_deriv_S(const FrankConstants& c, const Vec3& h, const Mat3& S) {
  const double tr = trace(S);
  const Mat3 W = skw(S);
  const Mat3 hh = hat(h);
  const double hW = ddot(hh, W);
  const Vec3 Wh = matvec(W, h);

  Mat3 r = (2.0 * c.k2) * W;
  const double diag = c.k1 * tr + c.k3 * norm2(h) * tr;
  r[0][0] += diag;
  r[1][1] += diag;
  r[2][2] += diag;
  r = r + (c.k4 * hW) * hh;
  r = r + (4.0 * c.k5) * skw(outer(Wh, h));
  return r;
}

Vec3 energy_deriv_h(const FrankConstants& c, const Vec3& h, const Mat3& S) {
  const double tr = trace(S);
  const Mat3 W = skw(S);
  const double hW = ddot(hat(h), W);

  Vec3 r = (c.k3 * tr * tr) * h;
  r = r + (2.0 * c.k4 * hW) * vee(W);
  r = r + 4.0 * c.k5 * matvec(transpose(W), matvec(W, h));
  return r;
}

double quad_form_ellipticity(const FrankConstants& c, const Vec3& a,
                             const Vec3& b) {
  const Mat3 ab = outer(a, b);
  const double q = ddot(ab, ten4_ddot_mat(c.Lambda, ab));
  const double bound = std::min(c.k1, c.k2) * norm2(a) * norm2(b);
  if (q < bound - 1e-11 * (1.0 + bound))
    throw std::logic_error("ellipticity bound violated");
  return q;
}

}  // namespace elsim
