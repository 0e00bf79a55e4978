#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "elsim/tensor.hpp"
#include "oracles.hpp"

using namespace elsim;

TEST_CASE("hat matches the displayed skew matrix") {
  const Mat3 h = hat({0, 0, 1});
  const Mat3 want(0, -1, 0, 1, 0, 0, 0, 0, 0);
  CHECK(oracle::max_abs_diff(h, want) == 0.0);
  CHECK(oracle::max_abs_diff(hat({0, 0, 0}), Mat3()) == 0.0);
}

TEST_CASE("hat acts as the cross product") {
  const Vec3 got = matvec(hat({1, 2, 3}), {4, 5, 6});
  CHECK(oracle::max_abs_diff(got, {-3, 6, -3}) == 0.0);

  oracle::Rng rng(1);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec3 a = rng.vec();
    const Vec3 b = rng.vec();
    worst = std::max(worst,
                     oracle::max_abs_diff(matvec(hat(a), b), oracle::cross(a, b)));
    // hat(a)^T hat(b) = (a.b) I - b (x) a
    const Mat3 lhs = matmul(transpose(hat(a)), hat(b));
    const Mat3 rhs = dot(a, b) * Mat3::identity() - outer(b, a);
    worst = std::max(worst, oracle::max_abs_diff(lhs, rhs));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("vee inverts hat and reads the fixed slots") {
  CHECK(oracle::max_abs_diff(vee(hat({1, 2, 3})), {1, 2, 3}) == 0.0);
  CHECK(oracle::max_abs_diff(vee(Mat3::identity()), {0, 0, 0}) == 0.0);
  const Mat3 a(0, 0, 5, 0, 0, 0, 0, 0, 0);
  CHECK(oracle::max_abs_diff(vee(a), {0, 5, 0}) == 0.0);

  oracle::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Vec3 v = rng.vec();
    CHECK(oracle::max_abs_diff(vee(hat(v)), v) == 0.0);
  }
}

TEST_CASE("levi-civita contraction is the cross product") {
  const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  const Vec3 got = ten3_ddot_mat(levi_civita(), outer(e1, e2));
  CHECK(oracle::max_abs_diff(got, e3) == 0.0);

  oracle::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = rng.vec(), b = rng.vec();
    CHECK(oracle::max_abs_diff(ten3_ddot_mat(levi_civita(), outer(a, b)),
                               oracle::cross(a, b)) < 1e-15);
  }
}

TEST_CASE("sym/skw split reconstructs and is orthogonal") {
  CHECK(oracle::max_abs_diff(sym(Mat3::identity()), Mat3::identity()) == 0.0);
  CHECK(oracle::max_abs_diff(skw(Mat3::identity()), Mat3()) == 0.0);
  const Vec3 a{0.3, -1.2, 0.7};
  CHECK(oracle::max_abs_diff(sym(hat(a)), Mat3()) == 0.0);
  CHECK(oracle::max_abs_diff(skw(hat(a)), hat(a)) == 0.0);

  oracle::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const Mat3 m = rng.mat();
    const auto [s, w] = sym_skw(m);
    CHECK(oracle::max_abs_diff(s + w, m) == 0.0);  // exact reconstruction
    CHECK(std::abs(ddot(s, skw(rng.mat()))) < 1e-14);
    // A : B = A : B_sym for symmetric A
    const Mat3 b = rng.mat();
    CHECK(std::abs(ddot(s, b) - ddot(s, sym(b))) < 1e-14);
  }
}

TEST_CASE("every contraction agrees with the naive loop referee") {
  oracle::Rng rng(5);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Ten3 g = rng.ten3();
    const Ten3 g2 = rng.ten3();
    const Ten4 t4 = rng.ten4();
    const Ten6 t6 = rng.ten6();
    const Mat3 a = rng.mat();
    const Vec3 x = rng.vec();

    worst = std::max(worst, oracle::max_abs_diff(ten3_ddot_mat(g, a),
                                                 oracle::ten3_ddot_mat(g, a)));
    worst = std::max(worst, oracle::max_abs_diff(ten3_dot_vec(g, x),
                                                 oracle::ten3_dot_vec(g, x)));
    worst = std::max(worst, oracle::max_abs_diff(ten3_dot_mat(g, a),
                                                 oracle::ten3_dot_mat(g, a)));
    worst = std::max(worst, oracle::max_abs_diff(ten4_ddot_mat(t4, a),
                                                 oracle::ten4_ddot_mat(t4, a)));
    worst = std::max(worst, oracle::max_abs_diff(ten4_dot_vec(t4, x),
                                                 oracle::ten4_dot_vec(t4, x)));
    worst = std::max(worst, oracle::max_abs_diff(ten4_ddot_ten3(t4, g),
                                                 oracle::ten4_ddot_ten3(t4, g)));
    worst = std::max(worst, oracle::max_abs_diff(ten4_tdot_ten3(t4, g),
                                                 oracle::ten4_tdot_ten3(t4, g)));
    worst = std::max(worst, oracle::rel_err(ten3_tdot_ten3(g, g2),
                                            oracle::ten3_tdot_ten3(g, g2)));

    const Ten4 got4 = mat_ddot_ten6(a, t6);
    const Ten4 want4 = oracle::mat_ddot_ten6(a, t6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            worst = std::max(worst, std::abs(got4.t[i][j][k][l] -
                                             want4.t[i][j][k][l]));

    worst = std::max(worst, oracle::max_abs_diff(ten6_tdot_ten3(t6, g),
                                                 oracle::ten6_tdot_ten3(t6, g)));

    const Ten5 got5 = vec_dot_ten6(x, t6);
    const Ten5 want5 = oracle::vec_dot_ten6(x, t6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l)
          for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
              worst = std::max(worst, std::abs(got5.t[i][j][l][m][n] -
                                               want5.t[i][j][l][m][n]));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("first-slot contraction used by the regularized stress") {
  oracle::Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Ten3 g = rng.ten3();
    const Vec3 x = rng.vec();
    const Mat3 got = vec_dot_ten3_first(x, g);
    Mat3 want;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i) want[j][k] += x[i] * g.t[i][j][k];
    CHECK(oracle::max_abs_diff(got, want) == 0.0);
  }
}
