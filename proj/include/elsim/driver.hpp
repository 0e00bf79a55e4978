// End-to-end run and sweep drivers behind the CLI: build initial data, march
// the state, stream diagnostics to energy.csv, drop field snapshots, and
// write machine-readable summaries.
#pragma once

#include "elsim/config.hpp"
#include "elsim/diagnostics.hpp"

namespace elsim {

struct RunResult {
  std::vector<DiagRow> rows;
  double initial_energy = 0;
  double norm_defect_initial = 0;
  double max_energy_residual = 0;
  InequalityReport inequality;
  RunStats stats;
  double frank_pairing_final = 0;  // elastic-energy pairing of the final state
  double h2S2_pairing_final = 0;
  std::string summary_json;
};

// executes the configured run and writes energy.csv, snapshots and
// run_summary.json into out_dir (defaults to cfg.output.directory)
RunResult run_simulation(const RunConfig& cfg, const std::string& out_dir);

struct SweepRun {
  double delta = 0;
  double epsilon = 0;
  double initial_energy = 0;
  double max_norm_l2 = 0;
  double final_norm_l2 = 0;
  double max_norm_linf = 0;
  double max_defect_total = 0;      // hessian-based
  double max_defect_total_lap = 0;  // laplacian-based
  double max_defect_gap = 0;  // |hess-based - lap-based| / total
  double penalty_bound_margin = 0;  // min over outputs of E0 - penalty
  double max_energy_residual = 0;
  double frank_pairing_final = 0;
  double h2S2_pairing_final = 0;
};

struct SweepResult {
  std::vector<SweepRun> runs;
  double slope_max_norm = 0;      // d log(max ||...||) / d log(delta)
  double slope_final_norm = 0;
  double fit_residual = 0;
  bool slope_fitted = false;
  bool monotone_norm_decrease = false;
  bool seven_thirds_schedule = false;
  bool equal_split = false;
  std::string summary_json;
};

// one run per delta (decreasing), same seed and data otherwise; honors
// EL_SIM_THREADS for parallel members
SweepResult delta_sweep(const RunConfig& base,
                        const std::vector<double>& deltas,
                        const std::string& out_root);

}  // namespace elsim
