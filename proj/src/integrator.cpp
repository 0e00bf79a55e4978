#include "elsim/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace elsim {

namespace {

using cd = std::complex<double>;

// coefficients of the implicit director operator A(k) = a I + b k k^T with
// a = delta |k|^4 + k2 |k|^2 and b = k1 - k2 (per-mode 3x3 SPD block)
struct ImplicitCoeffs {
  double k1 = 0, k2 = 0, delta = 0;
};

ImplicitCoeffs implicit_coeffs(const PhysicsParams& ph) {
  ImplicitCoeffs c;
  c.delta = ph.reg.delta;
  if (ph.model == EnergyModel::one_constant) {
    c.k1 = ph.K;
    c.k2 = ph.K;
  } else {
    c.k1 = ph.frank.k1;
    c.k2 = ph.frank.k2;
  }
  return c;
}

// nonlinear + penalty explicit right-hand sides; optionally with the
// implicit-operator parts subtracted (for the imex splitting) and the mu4
// viscous stress excluded
struct PartsOptions {
  bool subtract_implicit = false;
  bool freeze_velocity = false;
};

Rhs assemble_parts(const SimState& s, const PartsOptions& opt) {
  const TorusGrid& g = s.d.g;
  const int n = s.galerkin_n;
  const std::size_t np = g.phys_size();

  const PhysVec d_p = to_phys(s.d);
  const SpecMat gd_s = grad(s.d);
  const PhysMat gd_p = to_phys(gd_s);

  // full variational derivative: couples into the velocity equation and,
  // minus the implicitly treated linear part, into the director equation
  const SpecVec q_full = variational_derivative_q(s.d, s.phys, n);
  SpecVec q = q_full;
  if (opt.subtract_implicit) {
    const ImplicitCoeffs ic = implicit_coeffs(s.phys);
    const double ks = g.kscale();
    const int N = g.N, nk = g.nk();
    std::size_t idx = 0;
    for (int ix = 0; ix < N; ++ix) {
      const double kx = ix == N / 2 ? 0.0 : ks * g.mode(ix);
      for (int iy = 0; iy < N; ++iy) {
        const double ky = iy == N / 2 ? 0.0 : ks * g.mode(iy);
        for (int iz = 0; iz < nk; ++iz, ++idx) {
          const double kz = iz == N / 2 ? 0.0 : ks * iz;
          const double k2 = kx * kx + ky * ky + kz * kz;
          const double a = ic.delta * k2 * k2 + ic.k2 * k2;
          const double b = ic.k1 - ic.k2;
          const cd d0 = s.d.at(0, idx), d1 = s.d.at(1, idx),
                   d2 = s.d.at(2, idx);
          const cd kd = kx * d0 + ky * d1 + kz * d2;
          q.at(0, idx) -= a * d0 + b * kx * kd;
          q.at(1, idx) -= a * d1 + b * ky * kd;
          q.at(2, idx) -= a * d2 + b * kz * kd;
        }
      }
    }
  }
  const PhysVec q_p = to_phys(q_full);

  const PhysVec v_p = to_phys(s.v);
  const PhysMat gv_p = to_phys(grad(s.v));

  // director: -(v.grad)d + (grad v)_skw d - lambda (grad v)_sym d - q
  const double lam = s.phys.leslie.lambda;
  PhysVec dd_p(g);
  for (std::size_t i = 0; i < np; ++i) {
    const Mat3 gd = gd_p.mat_at(i);
    const Mat3 gv = gv_p.mat_at(i);
    const Vec3 d = d_p.vec_at(i);
    Vec3 r = -matvec(gd, v_p.vec_at(i));
    r = r + matvec(skw(gv), d) - lam * matvec(sym(gv), d);
    dd_p.set_vec(i, r);
  }
  Rhs out;
  out.dd = to_spec(dd_p);
  truncate(out.dd, n);
  hermitian_fix(out.dd);
  for (std::size_t i = 0; i < out.dd.a.size(); ++i) out.dd.a[i] -= q.a[i];

  if (opt.freeze_velocity) {
    out.dv = SpecVec(g);
    return out;
  }

  // velocity: P_n[-(v.grad)v + (grad d)^T q + div T^L + g]
  LeslieCoefficients lc = s.phys.leslie;
  if (opt.subtract_implicit) lc.mu4 = 0.0;
  PhysVec adv_p(g);
  PhysMat tl_p(g);
  for (std::size_t i = 0; i < np; ++i) {
    const Mat3 gd = gd_p.mat_at(i);
    const Mat3 gv = gv_p.mat_at(i);
    const Vec3 d = d_p.vec_at(i);
    const Vec3 q_i = q_p.vec_at(i);
    const Vec3 r = matvec(transpose(gd), q_i) - matvec(gv, v_p.vec_at(i));
    adv_p.set_vec(i, r);
    tl_p.set_mat(i, discrete_leslie_stress_point(lc, d, gv, q_i));
  }
  out.dv = to_spec(adv_p);
  const SpecVec div_tl = divergence(to_spec(tl_p));
  for (std::size_t i = 0; i < out.dv.a.size(); ++i)
    out.dv.a[i] += div_tl.a[i];
  if (s.has_forcing)
    for (std::size_t i = 0; i < out.dv.a.size(); ++i)
      out.dv.a[i] += s.forcing.a[i];
  leray_project(out.dv);
  truncate(out.dv, n);
  zero_mean(out.dv);  // the mean flow is pinned at zero
  hermitian_fix(out.dv);
  return out;
}

void check_finite(const SimState& s) {
  for (const cd& c : s.v.a)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw BlowUpError(s.t);
  for (const cd& c : s.d.a)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw BlowUpError(s.t);
}

void step_imex1(SimState& s, const StepperConfig& cfg) {
  const TorusGrid& g = s.d.g;
  const double dt = cfg.dt;
  const Rhs ex = assemble_parts(s, {true, cfg.freeze_velocity});
  const ImplicitCoeffs ic = implicit_coeffs(s.phys);
  const double mu4 = s.phys.leslie.mu4;
  const double ks = g.kscale();
  const int N = g.N, nk = g.nk();

  std::size_t idx = 0;
  for (int ix = 0; ix < N; ++ix) {
    const double kx = ix == N / 2 ? 0.0 : ks * g.mode(ix);
    for (int iy = 0; iy < N; ++iy) {
      const double ky = iy == N / 2 ? 0.0 : ks * g.mode(iy);
      for (int iz = 0; iz < nk; ++iz, ++idx) {
        const double kz = iz == N / 2 ? 0.0 : ks * iz;
        const double k2 = kx * kx + ky * ky + kz * kz;

        // director: (I + dt (a I + b kk^T)) d = d + dt * explicit
        const double a = 1.0 + dt * (ic.delta * k2 * k2 + ic.k2 * k2);
        const double b = dt * (ic.k1 - ic.k2);
        cd r0 = s.d.at(0, idx) + dt * ex.dd.at(0, idx);
        cd r1 = s.d.at(1, idx) + dt * ex.dd.at(1, idx);
        cd r2 = s.d.at(2, idx) + dt * ex.dd.at(2, idx);
        const cd kr = kx * r0 + ky * r1 + kz * r2;
        const double corr = b / (a * (a + b * k2));
        s.d.at(0, idx) = r0 / a - corr * kx * kr;
        s.d.at(1, idx) = r1 / a - corr * ky * kr;
        s.d.at(2, idx) = r2 / a - corr * kz * kr;

        if (!cfg.freeze_velocity) {
          const double av = 1.0 + dt * 0.5 * mu4 * k2;
          for (int c = 0; c < 3; ++c)
            s.v.at(c, idx) = (s.v.at(c, idx) + dt * ex.dv.at(c, idx)) / av;
        }
      }
    }
  }
  if (!cfg.freeze_velocity) {
    leray_project(s.v);
    truncate(s.v, s.galerkin_n);
    zero_mean(s.v);
    hermitian_fix(s.v);
  }
  truncate(s.d, s.galerkin_n);
  hermitian_fix(s.d);
  s.t += dt;
}

void step_rk4(SimState& s, const StepperConfig& cfg) {
  const double dt = cfg.dt;
  auto rhs = [&](const SimState& st) {
    return assemble_parts(st, {false, cfg.freeze_velocity});
  };
  auto advanced = [&](const SimState& base, const Rhs& k, double h) {
    SimState st = base;
    for (std::size_t i = 0; i < st.v.a.size(); ++i)
      st.v.a[i] += h * k.dv.a[i];
    for (std::size_t i = 0; i < st.d.a.size(); ++i)
      st.d.a[i] += h * k.dd.a[i];
    st.t = base.t + h;
    return st;
  };
  const Rhs k1 = rhs(s);
  const Rhs k2 = rhs(advanced(s, k1, 0.5 * dt));
  const Rhs k3 = rhs(advanced(s, k2, 0.5 * dt));
  const Rhs k4 = rhs(advanced(s, k3, dt));
  for (std::size_t i = 0; i < s.v.a.size(); ++i)
    s.v.a[i] += dt / 6.0 *
                (k1.dv.a[i] + 2.0 * k2.dv.a[i] + 2.0 * k3.dv.a[i] +
                 k4.dv.a[i]);
  for (std::size_t i = 0; i < s.d.a.size(); ++i)
    s.d.a[i] += dt / 6.0 *
                (k1.dd.a[i] + 2.0 * k2.dd.a[i] + 2.0 * k3.dd.a[i] +
                 k4.dd.a[i]);
  if (!cfg.freeze_velocity) {
    leray_project(s.v);
    truncate(s.v, s.galerkin_n);
    zero_mean(s.v);
    hermitian_fix(s.v);
  }
  truncate(s.d, s.galerkin_n);
  hermitian_fix(s.d);
  s.t += dt;
}

}  // namespace

Rhs assemble_rhs(const SimState& s, bool freeze_velocity) {
  return assemble_parts(s, {false, freeze_velocity});
}

void step(SimState& s, const StepperConfig& cfg) {
  if (!(cfg.dt > 0)) throw std::invalid_argument("dt must be positive");
  if (cfg.scheme == Scheme::imex1)
    step_imex1(s, cfg);
  else
    step_rk4(s, cfg);
  check_finite(s);
}

RunStats run(SimState& s, const StepperConfig& cfg, int cadence,
             const SampleHook& on_sample) {
  RunStats stats;
  const long nsteps = std::lround(cfg.t_end / cfg.dt);
  if (on_sample) on_sample(s, 0);
  stats.min_cfl_dt = std::numeric_limits<double>::infinity();
  for (long i = 1; i <= nsteps; ++i) {
    step(s, cfg);
    // advisory limits; fixed dt is kept for reproducibility
    const double vmax = max_abs(to_phys(s.v));
    double dt_cfl = std::numeric_limits<double>::infinity();
    if (vmax > 0) dt_cfl = cfg.cfl_safety * s.v.g.dx() / vmax;
    if (cfg.scheme == Scheme::rk4_explicit && s.phys.reg.delta > 0) {
      const double dx = s.v.g.dx();
      dt_cfl = std::min(dt_cfl, cfg.cfl_safety * dx * dx * dx * dx /
                                    s.phys.reg.delta);
    }
    if (std::isfinite(dt_cfl)) {
      stats.min_cfl_dt = std::min(stats.min_cfl_dt, dt_cfl);
      if (cfg.dt > dt_cfl) ++stats.cfl_violations;
    }
    if (on_sample && (cadence > 0 && i % cadence == 0 && i != nsteps))
      on_sample(s, static_cast<int>(i));
    if (i == nsteps && on_sample) on_sample(s, static_cast<int>(i));
    ++stats.steps;
  }
  return stats;
}

}  // namespace elsim
