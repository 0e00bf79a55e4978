#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elsim/oseen_frank.hpp"
#include "oracles.hpp"

using namespace elsim;

namespace {
const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
}

TEST_CASE("split constants stay nonnegative and reassemble K1..K3") {
  for (SplitMode mode : {SplitMode::min_split, SplitMode::equal_split}) {
    const FrankConstants c(1.7, 0.4, 2.9, mode);
    CHECK(c.k1 >= 0);
    CHECK(c.k2 >= 0);
    CHECK(c.k3 >= 0);
    CHECK(c.k4 >= 0);
    CHECK(c.k5 >= 0);
    CHECK(c.k1 + c.k3 == doctest::Approx(c.K1).epsilon(1e-14));
    CHECK(c.k2 + c.k4 == doctest::Approx(c.K2).epsilon(1e-14));
    CHECK(c.k2 + c.k5 == doctest::Approx(c.K3).epsilon(1e-14));
  }
  const FrankConstants eq(2.0, 1.0, 3.0, SplitMode::equal_split);
  CHECK(eq.k1 == eq.k2);
  CHECK_THROWS_AS(FrankConstants(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("energy density pinned values") {
  const FrankConstants c(1.1, 0.7, 1.9);
  CHECK(energy_density(c, e3, Mat3()) == 0.0);
  // h = e3, S = hat(e3): tr = 0, curl stand-in c = 2 e3, h.c = 2, h x c = 0
  CHECK(energy_density(c, e3, hat(e3)) ==
        doctest::Approx(2 * c.k2 + 2 * c.k4).epsilon(1e-14));
  // h = 0, S = I: only the k1 term survives, tr = 3
  CHECK(energy_density(c, Vec3(), Mat3::identity()) ==
        doctest::Approx(0.5 * c.k1 * 9).epsilon(1e-14));
}

TEST_CASE("energy density equals the curl-variable referee") {
  oracle::Rng rng(10);
  for (SplitMode mode : {SplitMode::min_split, SplitMode::equal_split}) {
    const FrankConstants c(1.3, 0.6, 2.1, mode);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const Vec3 h = rng.vec();
      const Mat3 S = rng.mat();
      const double want = oracle::frank_energy_curl_form(c.k1, c.k2, c.k3,
                                                         c.k4, c.k5, h, S);
      worst = std::max(worst, oracle::rel_err(energy_density(c, h, S), want));
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("tensor form matches the split form") {
  oracle::Rng rng(11);
  for (SplitMode mode : {SplitMode::min_split, SplitMode::equal_split}) {
    const FrankConstants c(0.8, 1.5, 1.1, mode);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const Vec3 h = rng.vec();
      const Mat3 S = rng.mat();
      const double a = energy_density(c, h, S);
      const double b = energy_density_tensor_form(c, h, S);
      worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
    }
    CHECK(worst < 1e-12);
    CHECK(energy_density_tensor_form(c, rng.vec(), Mat3()) == 0.0);
  }
}

TEST_CASE("structural tensors: pinned cases") {
  // k1=1, k2=0: Lambda:A = tr(A) I
  const Ten4 L = build_Lambda(1.0, 0.0);
  oracle::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Mat3 A = rng.mat();
    CHECK(oracle::max_abs_diff(ten4_ddot_mat(L, A),
                               trace(A) * Mat3::identity()) < 1e-15);
  }
  // k3=k4=k5=0 -> Theta = 0
  const Ten6 Z = build_Theta(0.0, 0.0, 0.0);
  double mx = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
              mx = std::max(mx, std::abs(Z.t[i][j][k][l][m][n]));
  CHECK(mx == 0.0);
  // major symmetry of Lambda for generic constants
  const FrankConstants c(1.9, 0.5, 1.2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          CHECK(c.Lambda.t[i][j][k][l] == c.Lambda.t[k][l][i][j]);
}

TEST_CASE("ellipticity quadratic form") {
  const FrankConstants c(4.0, 6.0, 2.0);  // k1 = 2, k2 = 1
  // displayed formula k1 (a.b)^2 + k2 (|a|^2 |b|^2 - (a.b)^2)
  oracle::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Vec3 a = rng.vec(), b = rng.vec();
    const double want =
        c.k1 * dot(a, b) * dot(a, b) +
        c.k2 * (norm2(a) * norm2(b) - dot(a, b) * dot(a, b));
    CHECK(oracle::rel_err(quad_form_ellipticity(c, a, b), want) < 1e-13);
  }
  // pinned: k1=2, k2=3
  FrankConstants p(1, 1, 1);
  p.k1 = 2;
  p.k2 = 3;
  p.Lambda = build_Lambda(2.0, 3.0);
  CHECK(quad_form_ellipticity(p, e1, e2) == doctest::Approx(3.0));
  CHECK(quad_form_ellipticity(p, e1, e1) == doctest::Approx(2.0));
  CHECK(quad_form_ellipticity(p, Vec3(), e1) == 0.0);
}

TEST_CASE("derivatives match central finite differences") {
  oracle::Rng rng(14);
  const FrankConstants c(0.9, 1.4, 0.5);
  const double step = 1e-5;
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 h = rng.vec();
    const Mat3 S = rng.mat();
    const Mat3 fs = energy_deriv_S(c, h, S);
    const Vec3 fh = energy_deriv_h(c, h, S);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Mat3 Sp = S, Sm = S;
        Sp[i][j] += step;
        Sm[i][j] -= step;
        const double fd = (energy_density(c, h, Sp) -
                           energy_density(c, h, Sm)) /
                          (2 * step);
        worst = std::max(worst, std::abs(fs[i][j] - fd) /
                                    (std::abs(fd) + 1e-2));
      }
      Vec3 hp = h, hm = h;
      hp[i] += step;
      hm[i] -= step;
      const double fd =
          (energy_density(c, hp, S) - energy_density(c, hm, S)) / (2 * step);
      worst = std::max(worst, std::abs(fh[i] - fd) / (std::abs(fd) + 1e-2));
    }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("derivative closed forms at degenerate arguments") {
  const FrankConstants c(1.2, 0.8, 1.6);
  oracle::Rng rng(15);
  // all dF/dh terms carry S
  CHECK(oracle::max_abs_diff(energy_deriv_h(c, rng.vec(), Mat3()), Vec3()) ==
        0.0);
  // h = 0 kills the k3/k4/k5 terms of dF/dS
  const Mat3 S = rng.mat();
  const Mat3 want = (c.k1 * trace(S)) * Mat3::identity() + (2.0 * c.k2) * skw(S);
  CHECK(oracle::max_abs_diff(energy_deriv_S(c, Vec3(), S), want) < 1e-15);
}

TEST_CASE("nonnegativity of the split form") {
  oracle::Rng rng(16);
  for (SplitMode mode : {SplitMode::min_split, SplitMode::equal_split}) {
    const FrankConstants c(0.4, 2.2, 1.3, mode);
    for (int i = 0; i < 500; ++i)
      CHECK(energy_density(c, 2.0 * rng.vec(), rng.mat()) >= 0.0);
  }
}

TEST_CASE("unit-director frame consistency with the original constants") {
  // for |h| = 1:  2F = K1 tr^2 + K2 (h.c)^2 + K3 |h x c|^2, c = 2 vee(S_skw)
  oracle::Rng rng(17);
  for (SplitMode mode : {SplitMode::min_split, SplitMode::equal_split}) {
    const FrankConstants c(1.1, 0.9, 1.3, mode);
    double worst = 0;
    for (int i = 0; i < 500; ++i) {
      Vec3 h = rng.vec();
      while (norm(h) < 0.1) h = rng.vec();
      h = (1.0 / norm(h)) * h;
      const Mat3 S = rng.mat();
      const Vec3 cv = 2.0 * vee(skw(S));
      const double want = 0.5 * (c.K1 * trace(S) * trace(S) +
                                 c.K2 * dot(h, cv) * dot(h, cv) +
                                 c.K3 * norm2(cross(h, cv)));
      worst = std::max(worst, oracle::rel_err(energy_density(c, h, S), want));
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("one-constant density") {
  CHECK(one_constant_density(1.0, Mat3()) == 0.0);
  CHECK(one_constant_density(2.0, Mat3::identity()) == doctest::Approx(3.0));
  CHECK(one_constant_density(1.0, hat(e3)) == doctest::Approx(1.0));
}
