// Oseen-Frank elastic energy density for a director field, in three
// equivalent formulations (split-constant form, structural-tensor form, and
// the original divergence/curl form on unit directors), with exact partial
// derivatives with respect to the director value and its gradient.
#pragma once

#include <optional>
#include <stdexcept>

#include "elsim/tensor.hpp"

namespace elsim {

enum class SplitMode { min_split, equal_split };

// Elastic constants K1 (splay), K2 (twist), K3 (bend) and the derived
// nonnegative split k1..k5 of the reformulated energy
//   2F(h,S) = k1 tr(S)^2 + 2 k2 |S_skw|^2 + k3 |h|^2 tr(S)^2
//           + k4 (hat(h):S_skw)^2 + 4 k5 |S_skw h|^2,
// which agrees with
//   2F = k1 (div d)^2 + k2 |curl d|^2 + k3 |d|^2 (div d)^2
//      + k4 (d.curl d)^2 + k5 |d x curl d|^2
// under curl d = 2 vee(S_skw). min_split keeps k1 = k3 = K1/2; equal_split
// forces k1 = k2 = min{K1,K2,K3}/2 as needed by the sharper penalty decay
// estimates.
struct FrankConstants {
  double K1 = 1.0, K2 = 1.0, K3 = 1.0;
  SplitMode split = SplitMode::min_split;
  double k1 = 0, k2 = 0, k3 = 0, k4 = 0, k5 = 0;

  Ten4 Lambda;  // built once; major-symmetric, strongly elliptic
  Ten6 Theta;

  FrankConstants() { derive(); }
  FrankConstants(double K1_, double K2_, double K3_,
                 SplitMode mode = SplitMode::min_split)
      : K1(K1_), K2(K2_), K3(K3_), split(mode) {
    if (!(K1 > 0) || !(K2 > 0) || !(K3 > 0))
      throw std::invalid_argument("Frank constants must be positive");
    derive();
  }

 private:
  void derive();
};

struct DirectorSample {
  Vec3 h;
  Mat3 S;
  std::optional<Ten3> gamma;  // second gradient, needed for regularized terms
};

// The five summands of F(h,S); total = sum.
struct FrankTerms {
  double t1 = 0, t2 = 0, t3 = 0, t4 = 0, t5 = 0;
  double total() const { return t1 + t2 + t3 + t4 + t5; }
};

FrankTerms energy_terms(const FrankConstants& c, const Vec3& h, const Mat3& S);

double energy_density(const FrankConstants& c, const Vec3& h, const Mat3& S);
inline double energy_density(const FrankConstants& c, const DirectorSample& s) {
  return energy_density(c, s.h, s.S);
}

// 2F = S : Lambda : S + (S ⊗ h) ⋮ Theta ⋮ (S ⊗ h); agrees with
// energy_density to round-off.
double energy_density_tensor_form(const FrankConstants& c, const Vec3& h,
                                  const Mat3& S);

Ten4 build_Lambda(double k1, double k2);
Ten6 build_Theta(double k3, double k4, double k5);

// Partial derivatives of F(h,S).
Mat3 energy_deriv_S(const FrankConstants& c, const Vec3& h, const Mat3& S);
Vec3 energy_deriv_h(const FrankConstants& c, const Vec3& h, const Mat3& S);

// a⊗b : Lambda : a⊗b = k1 (a.b)^2 + k2 (|a|^2|b|^2 - (a.b)^2); throws if the
// strong ellipticity bound min{k1,k2}|a|^2|b|^2 is violated beyond round-off.
double quad_form_ellipticity(const FrankConstants& c, const Vec3& a,
                             const Vec3& b);

// One-constant approximation F_D = K/2 |S|^2.
inline double one_constant_density(double K, const Mat3& S) {
  return 0.5 * K * norm2(S);
}

enum class EnergyModel { oseen_frank, one_constant };

}  // namespace elsim
