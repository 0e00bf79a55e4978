// Leslie viscous stress (both the corotational-rate form and the discrete
// substituted form), Ericksen elastic stress with its delta-regularized
// extension, coefficient validation against the dissipativity conditions,
// and the stress/variational-derivative duality residual.
#pragma once

#include <string>
#include <vector>

#include "elsim/energy.hpp"

namespace elsim {

struct LeslieValidation {
  bool mu1_nonnegative = false;
  bool mu1_zero = false;  // allowed, reported as a warning
  bool mu4_positive = false;
  bool aniso_positive = false;  // (mu5+mu6) - lambda (mu2+mu3) > 0
  bool quad_condition = false;  // 4 aniso > ((mu2+mu3) - lambda)^2
  bool parodi = false;          // lambda = mu2 + mu3
  double aniso = 0;
  bool valid() const {
    return mu1_nonnegative && mu4_positive && aniso_positive && quad_condition;
  }
  std::vector<std::string> violations() const;
};

LeslieValidation validate(const LeslieCoefficients& lc);

// ---- pointwise kernels ----

// corotational transport rate e = dd/dt + (v.grad)d - (grad v)_skw d
inline Vec3 corotational_rate_point(const Vec3& dd_dt, const Vec3& conv,
                                    const Mat3& grad_v, const Vec3& d) {
  return dd_dt + conv - matvec(skw(grad_v), d);
}

Mat3 leslie_stress_point(const LeslieCoefficients& lc, const Vec3& d,
                         const Mat3& grad_v, const Vec3& e);

// form with e replaced by -lambda (grad v)_sym d - q
Mat3 discrete_leslie_stress_point(const LeslieCoefficients& lc, const Vec3& d,
                                  const Mat3& grad_v, const Vec3& q);

// ---- field level ----

PhysVec corotational_rate(const SpecVec& dd_dt, const SpecVec& v,
                          const SpecVec& d);

PhysMat leslie_stress(const LeslieCoefficients& lc, const SpecVec& v,
                      const SpecVec& d, const PhysVec& e);

PhysMat discrete_leslie_stress(const LeslieCoefficients& lc, const SpecVec& v,
                               const SpecVec& d, const PhysVec& q);

// T^E = (grad d)^T dF/dS evaluated on the grid
PhysMat ericksen_stress(const SpecVec& d, const PhysicsParams& ph);

// T^E_delta = T^E + delta (lap d).(grad^2 d) - delta (grad d)^T grad(lap d)
PhysMat regularized_ericksen_stress(const SpecVec& d, const PhysicsParams& ph);

struct EricksenIdentity {
  double stress_pairing = 0;  // (T^E_delta ; grad w)
  double force_pairing = 0;   // ((grad d)^T q_delta , w)
  double residual = 0;        // normalized gap
};

// w must be discretely divergence-free; throws otherwise
EricksenIdentity ericksen_identity_residual(const SpecVec& d,
                                            const PhysicsParams& ph,
                                            const SpecVec& w);

}  // namespace elsim
