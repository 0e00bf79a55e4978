// Semi-implicit time stepping for the coupled flow/director Galerkin system.
// imex1 treats the stiff diagonal-in-k operators implicitly (the mu4 viscous
// term on divergence-free modes, the quadratic part of the elastic operator,
// and the delta lap^2 regularization); everything else is explicit. The
// explicit rk4 scheme integrates the full right-hand side and exists for
// verification runs.
#pragma once

#include <functional>
#include <stdexcept>

#include "elsim/leslie.hpp"

namespace elsim {

struct SimState {
  double t = 0;
  SpecVec v;
  SpecVec d;
  PhysicsParams phys;
  SpecVec forcing;  // spectral, already projected; empty => zero
  bool has_forcing = false;
  int galerkin_n = 0;  // spectral truncation radius (defaults to dealias cutoff)
};

enum class Scheme { imex1, rk4_explicit };

struct StepperConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  Scheme scheme = Scheme::imex1;
  double cfl_safety = 1.0;
  bool freeze_velocity = false;  // pure director relaxation runs
};

struct Rhs {
  SpecVec dv;
  SpecVec dd;
};

class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(double t)
      : std::runtime_error("non-finite coefficient at t=" + std::to_string(t)),
        time(t) {}
  double time;
};

// full semi-discrete right-hand side (velocity part Leray-projected and
// truncated, director part truncated)
Rhs assemble_rhs(const SimState& s, bool freeze_velocity = false);

void step(SimState& s, const StepperConfig& cfg);

struct RunStats {
  int steps = 0;
  int cfl_violations = 0;
  double min_cfl_dt = 0;  // strictest advective limit seen
};

// advances to t_end, invoking on_sample at the configured cadence (always at
// the initial and final states); throws BlowUpError on non-finite state
using SampleHook = std::function<void(const SimState&, int step_index)>;
RunStats run(SimState& s, const StepperConfig& cfg, int cadence,
             const SampleHook& on_sample);

}  // namespace elsim
