#include "elsim/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace elsim::fft {

namespace {

struct Plans {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;

Plans& plans_for(int N) {
  static std::map<int, Plans> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  const std::size_t ps = static_cast<std::size_t>(N) * N * N;
  const std::size_t ss = static_cast<std::size_t>(N) * N * (N / 2 + 1);
  std::vector<double> rbuf(ps);
  std::vector<std::complex<double>> cbuf(ss);

  Plans p;
  p.fwd = fftw_plan_dft_r2c_3d(N, N, N, rbuf.data(),
                               reinterpret_cast<fftw_complex*>(cbuf.data()),
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_c2r_3d(N, N, N,
                               reinterpret_cast<fftw_complex*>(cbuf.data()),
                               rbuf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(N, p).first->second;
}

}  // namespace

void c2r(const TorusGrid& g, const std::complex<double>* in, double* out) {
  Plans& p = plans_for(g.N);
  thread_local std::vector<std::complex<double>> scratch;
  scratch.assign(in, in + g.spec_size());
  fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(scratch.data()),
                       out);
}

void r2c(const TorusGrid& g, const double* in, std::complex<double>* out) {
  Plans& p = plans_for(g.N);
  thread_local std::vector<double> scratch;
  scratch.assign(in, in + g.phys_size());
  fftw_execute_dft_r2c(p.fwd, scratch.data(),
                       reinterpret_cast<fftw_complex*>(out));
  const double inv = 1.0 / static_cast<double>(g.phys_size());
  const std::size_t n = g.spec_size();
  for (std::size_t i = 0; i < n; ++i) out[i] *= inv;
}

}  // namespace elsim::fft
