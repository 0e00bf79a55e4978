#include "elsim/energy.hpp"

namespace elsim {

RegEnergyTerms reg_energy_density(const FrankConstants& c,
                                  const RegularizationParams& p,
                                  const DirectorSample& s) {
  if (!s.gamma)
    throw std::invalid_argument(
        "regularized energy density requires the second gradient");
  RegEnergyTerms out;
  const Vec3 lap = ten3_ddot_mat(*s.gamma, Mat3::identity());
  out.delta_term = 0.5 * p.delta * norm2(lap);
  out.frank = energy_density(c, s.h, s.S);
  const double dev = norm2(s.h) - 1.0;
  out.penalty = dev * dev / (4.0 * p.epsilon);
  return out;
}

Mat3 model_deriv_S(const PhysicsParams& ph, const Vec3& h, const Mat3& S) {
  if (ph.model == EnergyModel::one_constant) return ph.K * S;
  return energy_deriv_S(ph.frank, h, S);
}

Vec3 model_deriv_h(const PhysicsParams& ph, const Vec3& h, const Mat3& S) {
  if (ph.model == EnergyModel::one_constant) return Vec3();
  return energy_deriv_h(ph.frank, h, S);
}

EnergyBreakdown total_free_energy(const SpecVec& d, const PhysicsParams& ph) {
  const PhysVec dp = to_phys(d);
  const PhysMat Sp = to_phys(grad(d));
  const PhysVec lap = to_phys(laplacian(d));

  EnergyBreakdown out;
  const std::size_t n = d.g.phys_size();
  double acc[7] = {0, 0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 h = dp.vec_at(i);
    const Mat3 S = Sp.mat_at(i);
    if (ph.model == EnergyModel::one_constant) {
      acc[0] += one_constant_density(ph.K, S);
    } else {
      const FrankTerms t = energy_terms(ph.frank, h, S);
      acc[0] += t.t1;
      acc[1] += t.t2;
      acc[2] += t.t3;
      acc[3] += t.t4;
      acc[4] += t.t5;
    }
    const double dev = norm2(h) - 1.0;
    acc[5] += dev * dev;
    acc[6] += norm2(lap.vec_at(i));
  }
  const double w = d.g.volume() / static_cast<double>(n);
  for (int k = 0; k < 5; ++k) out.frank_k[k] = acc[k] * w;
  out.penalty = acc[5] * w / (4.0 * ph.reg.epsilon);
  out.reg_delta = 0.5 * ph.reg.delta * acc[6] * w;
  out.total = out.elastic() + out.penalty + out.reg_delta;
  return out;
}

SpecVec variational_derivative_q(const SpecVec& d, const PhysicsParams& ph,
                                 int galerkin_n) {
  const PhysVec dp = to_phys(d);
  const PhysMat Sp = to_phys(grad(d));
  const double inv_eps = 1.0 / ph.reg.epsilon;

  const std::size_t n = d.g.phys_size();
  PhysVec fh(d.g);
  PhysMat fs(d.g);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 h = dp.vec_at(i);
    const Mat3 S = Sp.mat_at(i);
    Vec3 a = model_deriv_h(ph, h, S);
    a = a + (inv_eps * (norm2(h) - 1.0)) * h;
    fh.set_vec(i, a);
    fs.set_mat(i, model_deriv_S(ph, h, S));
  }

  SpecVec q = to_spec(fh);
  const SpecVec div_fs = divergence(to_spec(fs));
  for (std::size_t i = 0; i < q.a.size(); ++i) q.a[i] -= div_fs.a[i];
  if (galerkin_n >= 0) truncate(q, galerkin_n);
  hermitian_fix(q);

  const SpecVec reg = bilaplacian(d);
  for (std::size_t i = 0; i < q.a.size(); ++i)
    q.a[i] += ph.reg.delta * reg.a[i];
  return q;
}

}  // namespace elsim
