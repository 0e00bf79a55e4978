// Trajectory diagnostics: per-snapshot energy and dissipation ledgers, the
// cumulative discrete energy-balance residual, the a-priori penalty and
// defect quantities, and the torus coercivity identities.
#pragma once

#include <vector>

#include "elsim/integrator.hpp"

namespace elsim {

struct DissipationBreakdown {
  double mu1_term = 0;    // mu1 || d . (grad v)_sym d ||^2
  double mu4_term = 0;    // mu4 || (grad v)_sym ||^2
  double aniso_term = 0;  // ((mu5+mu6) - lambda(mu2+mu3)) || (grad v)_sym d ||^2
  double q_term = 0;      // || q ||^2
  double cross_term = 0;  // ((mu2+mu3) - lambda) (q, (grad v)_sym d)
  double power_in = 0;    // <g, v>
  double dissipation() const {
    return mu1_term + mu4_term + aniso_term + q_term;
  }
};

struct DiagRow {
  double t = 0;
  EnergyBreakdown energy;
  DissipationBreakdown diss;
  double energy_eq_residual = 0;  // filled by EnergyLedger
  double norm_l2 = 0;             // || |d|^2 - 1 ||_L2
  double norm_linf = 0;
  double defect_total = 0;      // delta || grad^2 d ||^2
  double defect_total_lap = 0;  // delta || lap d ||^2
  double div_defect = 0;        // max_k |k . v(k)|
  double q_split_gap = 0;       // | ||q||^2 - (||d x q||^2 + ||d.q||^2) |
};

DiagRow compute_row(const SimState& s);

// accumulates trapezoid time integrals of the dissipation and power input
// and fills the normalized balance residual of each pushed row
class EnergyLedger {
 public:
  void push(DiagRow& row);
  double initial_energy() const { return e0_; }
  double max_residual() const { return max_residual_; }

 private:
  bool started_ = false;
  double e0_ = 0;
  double prev_t_ = 0;
  double prev_diss_ = 0, prev_power_ = 0;
  double cum_diss_ = 0, cum_power_ = 0;
  double max_residual_ = 0;
};

struct NormResidual {
  double l2 = 0;
  double linf = 0;
};
NormResidual norm_constraint_residual(const SpecVec& d);

struct DefectEstimate {
  double total = 0;      // delta || grad^2 d ||^2
  double total_lap = 0;  // delta || lap d ||^2 (equal on the torus)
  PhysScalar density;    // delta |grad^2 d|^2 per node
};
DefectEstimate defect_density(const SpecVec& d, double delta);

struct CoercivityReport {
  double gradient_identity = 0;  // | int |grad d|^2 - int (div d)^2+|curl d|^2 |, normalized
  double curl_split = 0;  // | int |d|^2|curl d|^2 - int (d.curl d)^2+|d x curl d|^2 |, normalized
};
CoercivityReport coercivity_identity_check(const SpecVec& d);

struct InequalityReport {
  bool holds = false;
  double min_margin = 0;  // most negative slack of RHS - LHS, relative to E0
  double max_q_split_gap = 0;
  double balance_residual = 0;  // max equality residual seen along the rows
};
// energy inequality along a sampled trajectory; a violation counts only
// beyond the tolerance plus the measured energy-balance defect of the rows
InequalityReport energy_inequality_check(const std::vector<DiagRow>& rows,
                                         double tolerance = 1e-6);

}  // namespace elsim
