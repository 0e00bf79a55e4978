#include "elsim/checks.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "elsim/diagnostics.hpp"
#include "elsim/initial.hpp"
#include "elsim/leslie.hpp"
#include "elsim/young.hpp"

namespace elsim {

namespace {

// referee implementations: straight index formulas, no reuse of the
// library kernels
namespace referee {

Vec3 ten3_ddot_mat(const Ten3& g, const Mat3& a) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i] += g.t[i][j][k] * a[j][k];
  return r;
}

Mat3 ten4_ddot_mat(const Ten4& l, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) r[i][j] += l.t[i][j][k][m] * a[k][m];
  return r;
}

Ten3 ten6_tdot_ten3(const Ten6& th, const Ten3& g) {
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

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

}  // namespace referee

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform() {
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
};

std::string detail(double value, double threshold) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max=%.3e thr=%.3e", value, threshold);
  return buf;
}

using CheckFn = CheckResult (*)(const std::string&);

CheckResult check_tensor_kernels(const std::string& fault) {
  Rng rng(11);
  double worst = 0;
  FrankConstants fc(1.1, 0.7, 1.6);
  Ten4 Lambda = fc.Lambda;
  if (fault == "lambda-symmetry") Lambda.t[0][1][2][0] += 1e-3;
  for (int trial = 0; trial < 200; ++trial) {
    const Ten3 g = rng.ten3();
    const Mat3 a = rng.mat();
    const Vec3 x = rng.vec();
    const Vec3 y = rng.vec();
    {
      const Vec3 got = ten3_ddot_mat(g, a);
      const Vec3 want = referee::ten3_ddot_mat(g, a);
      worst = std::max(worst, norm(got - want) / (norm(want) + 1e-300));
    }
    {
      const Mat3 got = ten4_ddot_mat(Lambda, a);
      const Mat3 want = referee::ten4_ddot_mat(Lambda, a);
      worst = std::max(worst,
                       std::sqrt(norm2(got - want) / (norm2(want) + 1e-300)));
    }
    {
      const Ten3 got = ten6_tdot_ten3(fc.Theta, g);
      const Ten3 want = referee::ten6_tdot_ten3(fc.Theta, g);
      Ten3 diff;
      double n2 = 0, d2 = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            const double e = got.t[i][j][k] - want.t[i][j][k];
            n2 += e * e;
            d2 += want.t[i][j][k] * want.t[i][j][k];
          }
      worst = std::max(worst, std::sqrt(n2 / (d2 + 1e-300)));
    }
    {
      const Vec3 got = matvec(hat(x), y);
      const Vec3 want = referee::cross(x, y);
      worst = std::max(worst, norm(got - want) / (norm(want) + 1e-300));
    }
    // Lambda major symmetry
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            worst = std::max(worst, std::abs(Lambda.t[i][j][k][l] -
                                             Lambda.t[k][l][i][j]));
  }
  return {"tensor-kernels-vs-referee", worst < 1e-13, detail(worst, 1e-13)};
}

CheckResult check_energy_forms(const std::string&) {
  Rng rng(12);
  double worst = 0;
  for (SplitMode mode : {SplitMode::min_split, SplitMode::equal_split}) {
    FrankConstants fc(1.3, 0.6, 2.1, mode);
    for (int trial = 0; trial < 300; ++trial) {
      const Vec3 h = rng.vec();
      const Mat3 S = rng.mat();
      const double a = energy_density(fc, h, S);
      const double b = energy_density_tensor_form(fc, h, S);
      worst = std::max(worst, std::abs(a - b) / (std::abs(a) + 1e-300));
    }
  }
  return {"energy-form-equivalence", worst < 1e-12, detail(worst, 1e-12)};
}

CheckResult check_gradients(const std::string&) {
  Rng rng(13);
  FrankConstants fc(0.9, 1.4, 0.5);
  const double step = 1e-5;
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 h = rng.vec();
    const Mat3 S = rng.mat();
    const Mat3 fs = energy_deriv_S(fc, h, S);
    const Vec3 fh = energy_deriv_h(fc, h, S);
    Mat3 fd_S;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Mat3 Sp = S, Sm = S;
        Sp[i][j] += step;
        Sm[i][j] -= step;
        fd_S[i][j] =
            (energy_density(fc, h, Sp) - energy_density(fc, h, Sm)) /
            (2 * step);
      }
    Vec3 fd_h;
    for (int i = 0; i < 3; ++i) {
      Vec3 hp = h, hm = h;
      hp[i] += step;
      hm[i] -= step;
      fd_h[i] =
          (energy_density(fc, hp, S) - energy_density(fc, hm, S)) / (2 * step);
    }
    worst = std::max(worst,
                     std::sqrt(norm2(fs - fd_S) / (norm2(fd_S) + 1e-300)));
    worst = std::max(worst, norm(fh - fd_h) / (norm(fd_h) + 1e-12));
  }
  return {"gradient-finite-difference", worst < 1e-6, detail(worst, 1e-6)};
}

CheckResult check_ellipticity(const std::string&) {
  Rng rng(14);
  FrankConstants fc(2.0, 3.0, 1.0);
  double worst = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Vec3 a = rng.vec();
    const Vec3 b = rng.vec();
    const double q = quad_form_ellipticity(fc, a, b);
    const double bound = std::min(fc.k1, fc.k2) * norm2(a) * norm2(b);
    worst = std::min(worst, q - bound);
  }
  return {"lambda-ellipticity", worst > -1e-12, detail(worst, -1e-12)};
}

CheckResult check_spectral_identities(const std::string&) {
  const TorusGrid g(16);
  const SpecVec a = random_smooth_vector(g, 77, 1.0, 2.0, g.cutoff);
  double worst = 0;
  {
    // curl(grad phi) = 0 and 2 vee(skw(grad a)) = curl a
    const SpecVec c = curl(a);
    const SpecMat ga = grad(a);
    const PhysMat ga_p = to_phys(ga);
    const PhysVec c_p = to_phys(c);
    for (std::size_t i = 0; i < g.phys_size(); ++i) {
      const Vec3 want = c_p.vec_at(i);
      const Vec3 got = 2.0 * vee(skw(ga_p.mat_at(i)));
      worst = std::max(worst, norm(got - want));
    }
  }
  {
    const SpecVec w = leray_projected(a);
    worst = std::max(worst, divergence_max(w));
    // idempotence
    const SpecVec w2 = leray_projected(w);
    for (std::size_t i = 0; i < w.a.size(); ++i)
      worst = std::max(worst, std::abs(w.a[i] - w2.a[i]));
  }
  {
    // Parseval: grid quadrature of |a|^2 vs coefficient sum
    const PhysVec a_p = to_phys(a);
    const double q = grid_norm2(a_p);
    const double p = l2_norm2(a);
    worst = std::max(worst, std::abs(q - p) / (p + 1e-300));
  }
  return {"spectral-calculus-identities", worst < 1e-12, detail(worst, 1e-12)};
}

CheckResult check_coercivity(const std::string&) {
  const TorusGrid g(16);
  SpecVec d = random_smooth_vector(g, 78, 0.8, 2.0, g.cutoff);
  const CoercivityReport r = coercivity_identity_check(d);
  const double worst = std::max(r.gradient_identity, r.curl_split);
  return {"coercivity-identities", worst < 1e-10, detail(worst, 1e-10)};
}

CheckResult check_ericksen_identity(const std::string&) {
  const TorusGrid g(16);
  PhysicsParams ph;
  ph.frank = FrankConstants(1.1, 0.9, 1.3);
  ph.reg = RegularizationParams::make(0.1, EpsSchedule::linear);
  SpecVec d = random_smooth_vector(g, 79, 0.1, 1.8, g.cutoff);
  const std::size_t i0 = g.spec_index(0, 0, 0);
  d.at(2, i0) += 1.0;
  SpecVec w = random_smooth_vector(g, 80, 1.0, 1.8, g.cutoff);
  leray_project(w);
  const EricksenIdentity r = ericksen_identity_residual(d, ph, w);
  return {"ericksen-stress-identity", r.residual < 1e-6,
          detail(r.residual, 1e-6)};
}

CheckResult check_stress_forms(const std::string&) {
  Rng rng(15);
  LeslieCoefficients lc{0.5, -0.3, 0.8, 1.0, 0.5, 0.5, 0.5};
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3 d = rng.vec();
    const Mat3 gv = rng.mat();
    const Vec3 q = rng.vec();
    // e substituted by -lambda (grad v)_sym d - q
    const Vec3 e = -1.0 * (lc.lambda * matvec(sym(gv), d) + q);
    const Mat3 a = leslie_stress_point(lc, d, gv, e);
    const Mat3 b = discrete_leslie_stress_point(lc, d, gv, q);
    worst = std::max(worst, std::sqrt(norm2(a - b) / (norm2(b) + 1e-300)));
  }
  return {"leslie-stress-form-equivalence", worst < 1e-12,
          detail(worst, 1e-12)};
}

CheckResult check_dissipativity(const std::string&) {
  Rng rng(16);
  LeslieCoefficients lc{0.5, -0.3, 0.8, 1.0, 0.5, 0.5, 0.5};
  const LeslieValidation lv = validate(lc);
  if (!lv.valid()) return {"dissipation-positivity", false, "coefficients"};
  const double m23 = lc.mu2 + lc.mu3;
  const double aniso = (lc.mu5 + lc.mu6) - lc.lambda * m23;
  double worst = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Vec3 d = rng.vec();
    const Mat3 Sv = sym(rng.mat());
    const Vec3 q = rng.vec();
    const Vec3 Svd = matvec(Sv, d);
    const double dsd = dot(d, Svd);
    const double dis = lc.mu1 * dsd * dsd + lc.mu4 * norm2(Sv) +
                       aniso * norm2(Svd) + norm2(q) -
                       (m23 - lc.lambda) * dot(q, Svd);
    worst = std::min(worst, dis);
  }
  return {"dissipation-positivity", worst >= -1e-14, detail(worst, -1e-14)};
}

CheckResult check_young_transform(const std::string&) {
  Rng rng(17);
  const PairingFunction inv = make_h2S2();
  const PairingFunction one = make_constant(1.0);
  const PairingFunction probe = make_support_probe();
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Vec3 ht = 0.45 * rng.vec();
    Mat3 St = 0.3 * rng.mat();
    const double a = young_transform(inv.f, ht, St);
    worst = std::max(worst, std::abs(a - inv.f(ht, St)) /
                                (std::abs(a) + 1e-300));
    const double b = young_transform(one.f, ht, St);
    const double want_b = (1.0 - norm2(ht)) * (1.0 - norm2(St));
    worst = std::max(worst, std::abs(b - want_b));
    const double c = young_transform(probe.f, ht, St);
    worst = std::max(worst, std::abs(c - (2.0 * norm2(ht) - 1.0)));
  }
  return {"young-transform-fixed-points", worst < 1e-13, detail(worst, 1e-13)};
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& filter,
                                    const std::string& inject_fault) {
  struct Entry {
    const char* name;
    CheckFn fn;
  };
  const Entry entries[] = {
      {"tensor-kernels-vs-referee", check_tensor_kernels},
      {"energy-form-equivalence", check_energy_forms},
      {"gradient-finite-difference", check_gradients},
      {"lambda-ellipticity", check_ellipticity},
      {"spectral-calculus-identities", check_spectral_identities},
      {"coercivity-identities", check_coercivity},
      {"ericksen-stress-identity", check_ericksen_identity},
      {"leslie-stress-form-equivalence", check_stress_forms},
      {"dissipation-positivity", check_dissipativity},
      {"young-transform-fixed-points", check_young_transform},
  };
  std::vector<CheckResult> out;
  for (const Entry& e : entries) {
    if (!filter.empty() && std::string(e.name).find(filter) ==
                               std::string::npos)
      continue;
    out.push_back(e.fn(inject_fault));
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace elsim
