#include "elsim/initial.hpp"

#include <cmath>
#include <stdexcept>

#include "elsim/io.hpp"

namespace elsim {

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // 53-bit uniforms; u1 shifted away from zero for the log
  const double u1 =
      (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = two_pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

SpecVec random_smooth_vector(const TorusGrid& g, std::uint64_t seed,
                             double amplitude, double smoothness, int radius) {
  GaussianStream rng(seed);
  SpecVec f(g);
  const int N = g.N, nk = g.nk();
  // fixed traversal order makes the construction part of the format
  std::size_t idx = 0;
  for (int ix = 0; ix < N; ++ix) {
    const int mx = g.mode(ix);
    for (int iy = 0; iy < N; ++iy) {
      const int my = g.mode(iy);
      for (int iz = 0; iz < nk; ++iz, ++idx) {
        const double m2 =
            double(mx) * mx + double(my) * my + double(iz) * iz;
        for (int c = 0; c < 3; ++c) {
          const double re = rng.next();
          const double im = rng.next();
          if (m2 == 0.0 || m2 > double(radius) * radius) continue;
          const double env = std::exp(-m2 / (smoothness * smoothness));
          f.at(c, idx) = std::complex<double>(env * re, env * im);
        }
      }
    }
  }
  hermitian_fix(f);
  // amplitude is the root-mean-square of the physical field
  const double rms = std::sqrt(l2_norm2(f) / g.volume());
  if (rms > 0) {
    const double scale = amplitude / rms;
    for (auto& c : f.a) c *= scale;
  }
  return f;
}

InitialData make_initial(const InitialConfig& cfg, const TorusGrid& g) {
  InitialData out;
  switch (cfg.kind) {
    case InitialKind::constant: {
      out.v = SpecVec(g);
      out.d = SpecVec(g);
      const double bn = norm(cfg.background);
      if (!(bn > 0))
        throw std::invalid_argument("background director must be nonzero");
      const Vec3 b = (1.0 / bn) * cfg.background;
      const std::size_t i0 = g.spec_index(0, 0, 0);
      for (int c = 0; c < 3; ++c) out.d.at(c, i0) = b[c];
      out.norm_defect_linf = 0;
      return out;
    }
    case InitialKind::random_smooth: {
      out.v = random_smooth_vector(g, cfg.seed, cfg.velocity_amplitude,
                                   cfg.smoothness, g.cutoff);
      leray_project(out.v);
      zero_mean(out.v);

      SpecVec d = random_smooth_vector(g, cfg.seed + 1, cfg.director_amplitude,
                                       cfg.smoothness, g.cutoff);
      const double bn = norm(cfg.background);
      if (!(bn > 0))
        throw std::invalid_argument("background director must be nonzero");
      const Vec3 b = (1.0 / bn) * cfg.background;
      const std::size_t i0 = g.spec_index(0, 0, 0);
      for (int c = 0; c < 3; ++c) d.at(c, i0) += b[c];

      PhysVec d_p = to_phys(d);
      const std::size_t n = g.phys_size();
      for (std::size_t i = 0; i < n; ++i) {
        const Vec3 raw = d_p.vec_at(i);
        const double r = norm(raw);
        d_p.set_vec(i, r < cfg.floor_guard ? b : (1.0 / r) * raw);
      }
      out.d = to_spec(d_p);
      truncate(out.d, g.cutoff);
      hermitian_fix(out.d);

      const PhysVec chk = to_phys(out.d);
      double defect = 0;
      for (std::size_t i = 0; i < n; ++i)
        defect = std::max(defect, std::abs(norm(chk.vec_at(i)) - 1.0));
      out.norm_defect_linf = defect;
      return out;
    }
    case InitialKind::file: {
      out.v = read_snapshot(cfg.velocity_file, g);
      leray_project(out.v);
      zero_mean(out.v);
      out.d = read_snapshot(cfg.director_file, g);
      truncate(out.v, g.cutoff);
      truncate(out.d, g.cutoff);
      const PhysVec chk = to_phys(out.d);
      double defect = 0;
      for (std::size_t i = 0; i < g.phys_size(); ++i)
        defect = std::max(defect, std::abs(norm(chk.vec_at(i)) - 1.0));
      out.norm_defect_linf = defect;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace elsim
