#include "elsim/field.hpp"

#include <algorithm>
#include <cmath>

namespace elsim {

namespace {

using cd = std::complex<double>;

// ik multiplier for one axis; the Nyquist mode is zeroed to keep spectral
// differentiation exactly skew-adjoint on the grid
struct ModeIter {
  const TorusGrid& g;
  template <typename F>
  void for_each(F&& fn) const {
    const int N = g.N, nk = g.nk();
    std::size_t idx = 0;
    for (int ix = 0; ix < N; ++ix) {
      const int mx = g.mode(ix);
      for (int iy = 0; iy < N; ++iy) {
        const int my = g.mode(iy);
        for (int iz = 0; iz < nk; ++iz, ++idx) {
          fn(idx, mx, my, iz, ix == N / 2, iy == N / 2, iz == N / 2);
        }
      }
    }
  }
};

}  // namespace

SpecVec grad(const SpecScalar& f) {
  SpecVec out(f.g);
  const double ks = f.g.kscale();
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const cd v = f.a[i];
    const cd iu(0.0, 1.0);
    out.at(0, i) = nx ? cd(0) : iu * (ks * mx) * v;
    out.at(1, i) = ny ? cd(0) : iu * (ks * my) * v;
    out.at(2, i) = nz ? cd(0) : iu * (ks * mz) * v;
  });
  return out;
}

SpecMat grad(const SpecVec& f) {
  SpecMat out(f.g);
  const double ks = f.g.kscale();
  for (int a = 0; a < 3; ++a) {
    ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                               bool ny, bool nz) {
      const cd v = f.at(a, i);
      const cd iu(0.0, 1.0);
      out.at(3 * a + 0, i) = nx ? cd(0) : iu * (ks * mx) * v;
      out.at(3 * a + 1, i) = ny ? cd(0) : iu * (ks * my) * v;
      out.at(3 * a + 2, i) = nz ? cd(0) : iu * (ks * mz) * v;
    });
  }
  return out;
}

SpecField<27> hessian(const SpecVec& f) {
  SpecField<27> out(f.g);
  const double ks = f.g.kscale();
  for (int a = 0; a < 3; ++a) {
    ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                               bool ny, bool nz) {
      const cd v = f.at(a, i);
      const double k[3] = {nx ? 0.0 : ks * mx, ny ? 0.0 : ks * my,
                           nz ? 0.0 : ks * mz};
      for (int j = 0; j < 3; ++j)
        for (int k2 = 0; k2 < 3; ++k2)
          out.at(9 * a + 3 * j + k2, i) = -k[j] * k[k2] * v;
    });
  }
  return out;
}

SpecScalar divergence(const SpecVec& f) {
  SpecScalar out(f.g);
  const double ks = f.g.kscale();
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const cd iu(0.0, 1.0);
    cd s(0);
    if (!nx) s += iu * (ks * mx) * f.at(0, i);
    if (!ny) s += iu * (ks * my) * f.at(1, i);
    if (!nz) s += iu * (ks * mz) * f.at(2, i);
    out.a[i] = s;
  });
  return out;
}

SpecVec divergence(const SpecMat& f) {
  SpecVec out(f.g);
  const double ks = f.g.kscale();
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const cd iu(0.0, 1.0);
    const double k[3] = {nx ? 0.0 : ks * mx, ny ? 0.0 : ks * my,
                         nz ? 0.0 : ks * mz};
    for (int a = 0; a < 3; ++a) {
      cd s(0);
      for (int j = 0; j < 3; ++j) s += iu * k[j] * f.at(3 * a + j, i);
      out.at(a, i) = s;
    }
  });
  return out;
}

SpecVec curl(const SpecVec& f) {
  SpecVec out(f.g);
  const double ks = f.g.kscale();
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const cd iu(0.0, 1.0);
    const double k[3] = {nx ? 0.0 : ks * mx, ny ? 0.0 : ks * my,
                         nz ? 0.0 : ks * mz};
    const cd v0 = f.at(0, i), v1 = f.at(1, i), v2 = f.at(2, i);
    out.at(0, i) = iu * (k[1] * v2 - k[2] * v1);
    out.at(1, i) = iu * (k[2] * v0 - k[0] * v2);
    out.at(2, i) = iu * (k[0] * v1 - k[1] * v0);
  });
  return out;
}

SpecMat grad_laplacian(const SpecVec& f) {
  SpecMat out(f.g);
  const double ks = f.g.kscale();
  for (int a = 0; a < 3; ++a) {
    ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                               bool ny, bool nz) {
      const cd iu(0.0, 1.0);
      const double k[3] = {nx ? 0.0 : ks * mx, ny ? 0.0 : ks * my,
                           nz ? 0.0 : ks * mz};
      const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
      const cd lap = -k2 * f.at(a, i);
      for (int j = 0; j < 3; ++j) out.at(3 * a + j, i) = iu * k[j] * lap;
    });
  }
  return out;
}

template <int C>
SpecField<C> laplacian(const SpecField<C>& f) {
  SpecField<C> out(f.g);
  const double ks = f.g.kscale();
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const double k[3] = {nx ? 0.0 : ks * mx, ny ? 0.0 : ks * my,
                         nz ? 0.0 : ks * mz};
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    for (int c = 0; c < C; ++c) out.at(c, i) = -k2 * f.at(c, i);
  });
  return out;
}

template <int C>
SpecField<C> bilaplacian(const SpecField<C>& f) {
  SpecField<C> out(f.g);
  const double ks = f.g.kscale();
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const double k[3] = {nx ? 0.0 : ks * mx, ny ? 0.0 : ks * my,
                         nz ? 0.0 : ks * mz};
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    for (int c = 0; c < C; ++c) out.at(c, i) = k2 * k2 * f.at(c, i);
  });
  return out;
}

void leray_project(SpecVec& f) {
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const double k[3] = {nx ? 0.0 : double(mx), ny ? 0.0 : double(my),
                         nz ? 0.0 : double(mz)};
    const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    if (k2 == 0.0) return;
    const cd kv = (k[0] * f.at(0, i) + k[1] * f.at(1, i) + k[2] * f.at(2, i)) /
                  k2;
    for (int a = 0; a < 3; ++a) f.at(a, i) -= k[a] * kv;
  });
}

SpecVec leray_projected(const SpecVec& f) {
  SpecVec out = f;
  leray_project(out);
  return out;
}

template <int C>
void truncate(SpecField<C>& f, int radius) {
  const long r2 = static_cast<long>(radius) * radius;
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool,
                             bool, bool) {
    const long m2 =
        static_cast<long>(mx) * mx + static_cast<long>(my) * my +
        static_cast<long>(mz) * mz;
    if (m2 > r2)
      for (int c = 0; c < C; ++c) f.at(c, i) = cd(0);
  });
}

template <int C>
SpecField<C> truncated(const SpecField<C>& f, int radius) {
  SpecField<C> out = f;
  truncate(out, radius);
  return out;
}

template <int C>
void hermitian_fix(SpecField<C>& f) {
  const int N = f.g.N;
  for (int plane : {0, N / 2}) {
    for (int ix = 0; ix < N; ++ix) {
      const int jx = (N - ix) % N;
      for (int iy = 0; iy < N; ++iy) {
        const int jy = (N - iy) % N;
        if (std::make_pair(jx, jy) < std::make_pair(ix, iy)) continue;
        const std::size_t i = f.g.spec_index(ix, iy, plane);
        const std::size_t j = f.g.spec_index(jx, jy, plane);
        for (int c = 0; c < C; ++c) {
          if (i == j) {
            f.at(c, i) = cd(f.at(c, i).real(), 0.0);
          } else {
            const cd avg = 0.5 * (f.at(c, i) + std::conj(f.at(c, j)));
            f.at(c, i) = avg;
            f.at(c, j) = std::conj(avg);
          }
        }
      }
    }
  }
}

void zero_mean(SpecVec& f) {
  const std::size_t i0 = f.g.spec_index(0, 0, 0);
  for (int a = 0; a < 3; ++a) f.at(a, i0) = cd(0);
}

double divergence_max(const SpecVec& f) {
  double m = 0;
  const double ks = f.g.kscale();
  ModeIter{f.g}.for_each([&](std::size_t i, int mx, int my, int mz, bool nx,
                             bool ny, bool nz) {
    const double k[3] = {nx ? 0.0 : ks * mx, ny ? 0.0 : ks * my,
                         nz ? 0.0 : ks * mz};
    const cd s = k[0] * f.at(0, i) + k[1] * f.at(1, i) + k[2] * f.at(2, i);
    m = std::max(m, std::abs(s));
  });
  return m;
}

template <int C>
double l2_inner(const SpecField<C>& f, const SpecField<C>& h) {
  const int N = f.g.N, nk = f.g.nk();
  double s = 0;
  for (int c = 0; c < C; ++c) {
    const cd* fa = f.comp(c);
    const cd* ha = h.comp(c);
    std::size_t idx = 0;
    for (int ix = 0; ix < N; ++ix)
      for (int iy = 0; iy < N; ++iy)
        for (int iz = 0; iz < nk; ++iz, ++idx) {
          const double w = (iz == 0 || iz == N / 2) ? 1.0 : 2.0;
          s += w * (fa[idx].real() * ha[idx].real() +
                    fa[idx].imag() * ha[idx].imag());
        }
  }
  return s * f.g.volume();
}

template <int C>
double l2_norm2(const SpecField<C>& f) {
  return l2_inner(f, f);
}

double integral(const PhysScalar& f) {
  double s = 0;
  for (double v : f.a) s += v;
  return s / static_cast<double>(f.g.phys_size()) * f.g.volume();
}

template <int C>
double grid_inner(const PhysField<C>& f, const PhysField<C>& h) {
  double s = 0;
  const std::size_t n = C * f.g.phys_size();
  for (std::size_t i = 0; i < n; ++i) s += f.a[i] * h.a[i];
  return s / static_cast<double>(f.g.phys_size()) * f.g.volume();
}

template <int C>
double grid_norm2(const PhysField<C>& f) {
  return grid_inner(f, f);
}

template <int C>
double max_abs(const PhysField<C>& f) {
  double m = 0;
  for (double v : f.a) m = std::max(m, std::abs(v));
  return m;
}

Vec3 node_position(const TorusGrid& g, std::size_t i) {
  const int N = g.N;
  const int iz = static_cast<int>(i % N);
  const int iy = static_cast<int>((i / N) % N);
  const int ix = static_cast<int>(i / (static_cast<std::size_t>(N) * N));
  const double h = g.dx();
  return {ix * h, iy * h, iz * h};
}

SpecScalar dealiased_product(const SpecScalar& f, const SpecScalar& h) {
  PhysScalar fp = to_phys(f);
  const PhysScalar hp = to_phys(h);
  for (std::size_t i = 0; i < fp.a.size(); ++i) fp.a[i] *= hp.a[i];
  SpecScalar out = to_spec(fp);
  truncate(out, f.g.cutoff);
  hermitian_fix(out);
  return out;
}

template <int C>
SpecField<C> resample(const SpecField<C>& f, const TorusGrid& dst) {
  SpecField<C> out(dst);
  const int Ns = f.g.N, Nd = dst.N;
  const int half = std::min(Ns, Nd) / 2;
  for (int mx = -half + 1; mx <= half - 1; ++mx)
    for (int my = -half + 1; my <= half - 1; ++my)
      for (int mz = 0; mz <= half - 1; ++mz) {
        const int sx = mx >= 0 ? mx : mx + Ns;
        const int sy = my >= 0 ? my : my + Ns;
        const int dx = mx >= 0 ? mx : mx + Nd;
        const int dy = my >= 0 ? my : my + Nd;
        const std::size_t si = f.g.spec_index(sx, sy, mz);
        const std::size_t di = dst.spec_index(dx, dy, mz);
        for (int c = 0; c < C; ++c) out.at(c, di) = f.at(c, si);
      }
  return out;
}

#define ELSIM_INSTANTIATE(C)                                              \
  template SpecField<C> laplacian<C>(const SpecField<C>&);                \
  template SpecField<C> bilaplacian<C>(const SpecField<C>&);              \
  template void truncate<C>(SpecField<C>&, int);                          \
  template SpecField<C> truncated<C>(const SpecField<C>&, int);           \
  template void hermitian_fix<C>(SpecField<C>&);                          \
  template double l2_inner<C>(const SpecField<C>&, const SpecField<C>&);  \
  template double l2_norm2<C>(const SpecField<C>&);                       \
  template double grid_inner<C>(const PhysField<C>&, const PhysField<C>&); \
  template double grid_norm2<C>(const PhysField<C>&);                     \
  template double max_abs<C>(const PhysField<C>&);                        \
  template SpecField<C> resample<C>(const SpecField<C>&, const TorusGrid&);

ELSIM_INSTANTIATE(1)
ELSIM_INSTANTIATE(3)
ELSIM_INSTANTIATE(9)
ELSIM_INSTANTIATE(27)

#undef ELSIM_INSTANTIATE

}  // namespace elsim
