#include "elsim/leslie.hpp"

#include <cmath>

namespace elsim {

std::vector<std::string> LeslieValidation::violations() const {
  std::vector<std::string> out;
  if (!mu1_nonnegative) out.push_back("mu1 > 0 (or = 0) violated");
  if (!mu4_positive) out.push_back("mu4 > 0 violated");
  if (!aniso_positive)
    out.push_back("(mu5+mu6) - lambda (mu2+mu3) > 0 violated");
  if (!quad_condition)
    out.push_back("4((mu5+mu6) - lambda(mu2+mu3)) > ((mu2+mu3)-lambda)^2 violated");
  return out;
}

LeslieValidation validate(const LeslieCoefficients& lc) {
  LeslieValidation r;
  r.mu1_nonnegative = lc.mu1 >= 0;
  r.mu1_zero = lc.mu1 == 0;
  r.mu4_positive = lc.mu4 > 0;
  const double m23 = lc.mu2 + lc.mu3;
  r.aniso = (lc.mu5 + lc.mu6) - lc.lambda * m23;
  r.aniso_positive = r.aniso > 0;
  const double gap = m23 - lc.lambda;
  r.quad_condition = 4.0 * r.aniso > gap * gap;
  r.parodi = std::abs(gap) <= 1e-14 * (std::abs(lc.lambda) + std::abs(m23)) ||
             gap == 0.0;
  return r;
}

Mat3 leslie_stress_point(const LeslieCoefficients& lc, const Vec3& d,
                         const Mat3& grad_v, const Vec3& e) {
  const Mat3 Sv = sym(grad_v);
  const Vec3 Svd = matvec(Sv, d);
  const Mat3 dSvd = outer(d, Svd);
  const Mat3 de = outer(d, e);

  Mat3 T = (lc.mu1 * dot(d, Svd)) * outer(d, d);
  T = T + lc.mu4 * Sv;
  T = T + (lc.mu5 + lc.mu6) * sym(dSvd);
  T = T + (lc.mu2 + lc.mu3) * sym(de);
  T = T + lc.lambda * skw(dSvd);
  T = T + skw(de);
  return T;
}

Mat3 discrete_leslie_stress_point(const LeslieCoefficients& lc, const Vec3& d,
                                  const Mat3& grad_v, const Vec3& q) {
  const Mat3 Sv = sym(grad_v);
  const Vec3 Svd = matvec(Sv, d);
  const double m23 = lc.mu2 + lc.mu3;
  const Mat3 dq = outer(d, q);

  Mat3 T = (lc.mu1 * dot(d, Svd)) * outer(d, d);
  T = T + lc.mu4 * Sv;
  T = T - m23 * sym(dq);
  T = T - skw(dq);
  T = T + ((lc.mu5 + lc.mu6) - lc.lambda * m23) * sym(outer(d, Svd));
  return T;
}

PhysVec corotational_rate(const SpecVec& dd_dt, const SpecVec& v,
                          const SpecVec& d) {
  const PhysVec dt_p = to_phys(dd_dt);
  const PhysVec v_p = to_phys(v);
  const PhysVec d_p = to_phys(d);
  const PhysMat gd_p = to_phys(grad(d));
  const PhysMat gv_p = to_phys(grad(v));
  return map_nodes<3>(d.g, [&](std::size_t i) {
    const Mat3 gd = gd_p.mat_at(i);
    const Vec3 conv = matvec(gd, v_p.vec_at(i));
    return corotational_rate_point(dt_p.vec_at(i), conv, gv_p.mat_at(i),
                                   d_p.vec_at(i));
  });
}

PhysMat leslie_stress(const LeslieCoefficients& lc, const SpecVec& v,
                      const SpecVec& d, const PhysVec& e) {
  const PhysVec d_p = to_phys(d);
  const PhysMat gv_p = to_phys(grad(v));
  return map_nodes<9>(d.g, [&](std::size_t i) {
    return leslie_stress_point(lc, d_p.vec_at(i), gv_p.mat_at(i), e.vec_at(i));
  });
}

PhysMat discrete_leslie_stress(const LeslieCoefficients& lc, const SpecVec& v,
                               const SpecVec& d, const PhysVec& q) {
  const PhysVec d_p = to_phys(d);
  const PhysMat gv_p = to_phys(grad(v));
  return map_nodes<9>(d.g, [&](std::size_t i) {
    return discrete_leslie_stress_point(lc, d_p.vec_at(i), gv_p.mat_at(i),
                                        q.vec_at(i));
  });
}

PhysMat ericksen_stress(const SpecVec& d, const PhysicsParams& ph) {
  const PhysVec d_p = to_phys(d);
  const PhysMat gd_p = to_phys(grad(d));
  return map_nodes<9>(d.g, [&](std::size_t i) {
    const Mat3 gd = gd_p.mat_at(i);
    const Mat3 fs = model_deriv_S(ph, d_p.vec_at(i), gd);
    return matmul(transpose(gd), fs);
  });
}

PhysMat regularized_ericksen_stress(const SpecVec& d,
                                    const PhysicsParams& ph) {
  const PhysVec d_p = to_phys(d);
  const PhysMat gd_p = to_phys(grad(d));
  const PhysVec lap_p = to_phys(laplacian(d));
  const PhysTen3 hess_p = to_phys(hessian(d));
  const PhysMat glap_p = to_phys(grad_laplacian(d));
  const double delta = ph.reg.delta;

  return map_nodes<9>(d.g, [&](std::size_t i) {
    const Mat3 gd = gd_p.mat_at(i);
    const Mat3 fs = model_deriv_S(ph, d_p.vec_at(i), gd);
    Mat3 T = matmul(transpose(gd), fs);
    T = T + delta * vec_dot_ten3_first(lap_p.vec_at(i), hess_p.ten3_at(i));
    T = T - delta * matmul(transpose(gd), glap_p.mat_at(i));
    return T;
  });
}

EricksenIdentity ericksen_identity_residual(const SpecVec& d,
                                            const PhysicsParams& ph,
                                            const SpecVec& w) {
  const double div_defect = divergence_max(w);
  const double scale = std::sqrt(l2_norm2(w));
  if (div_defect > 1e-10 * (scale + 1e-300))
    throw std::invalid_argument("test field is not divergence-free");

  const PhysMat te = regularized_ericksen_stress(d, ph);
  const PhysMat gw = to_phys(grad(w));
  const double lhs = grid_inner(te, gw);

  const SpecVec q = variational_derivative_q(d, ph, -1);
  const PhysVec q_p = to_phys(q);
  const PhysMat gd_p = to_phys(grad(d));
  const PhysVec force = map_nodes<3>(d.g, [&](std::size_t i) {
    return matvec(transpose(gd_p.mat_at(i)), q_p.vec_at(i));
  });
  const PhysVec w_p = to_phys(w);
  const double rhs = grid_inner(force, w_p);

  EricksenIdentity out;
  out.stress_pairing = lhs;
  out.force_pairing = rhs;
  out.residual = std::abs(lhs - rhs) /
                 (std::abs(lhs) + std::abs(rhs) + 1e-300);
  return out;
}

}  // namespace elsim
