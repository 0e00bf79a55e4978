// Deterministic initial data. The random kind draws Gaussian mode
// coefficients from mt19937_64 through a Box-Muller map (a fixed, named
// generator so artifacts reproduce bit-for-bit across platforms), shapes
// them with a smooth spectral envelope, Leray-projects the velocity, and
// renormalizes the director pointwise before re-truncation.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "elsim/field.hpp"

namespace elsim {

enum class InitialKind { constant, random_smooth, file };

struct InitialConfig {
  InitialKind kind = InitialKind::constant;
  std::uint64_t seed = 0;
  Vec3 background{0, 0, 1};        // uniform director / spectral mean
  double velocity_amplitude = 0.3;
  double director_amplitude = 0.2;
  double smoothness = 2.5;   // spectral envelope exp(-(|m|/smoothness)^2)
  double floor_guard = 0.1;  // below this norm the background substitutes
  std::string velocity_file;
  std::string director_file;
};

struct InitialData {
  SpecVec v;
  SpecVec d;
  double norm_defect_linf = 0;  // max | |d0| - 1 | after re-truncation
};

InitialData make_initial(const InitialConfig& cfg, const TorusGrid& g);

// seeded standard normal stream; mt19937_64 + Box-Muller, not
// std::normal_distribution, so the byte stream is platform-independent
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : eng_(seed) {}
  double next();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0;
};

// band-limited random fields used by tests and diagnostics probes
SpecVec random_smooth_vector(const TorusGrid& g, std::uint64_t seed,
                             double amplitude, double smoothness, int radius);

}  // namespace elsim
