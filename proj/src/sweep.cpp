#include "elsim/driver.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>

#include "elsim/io.hpp"
#include "elsim/young.hpp"

namespace elsim {

using nlohmann::json;
namespace fs = std::filesystem;

RunResult run_simulation(const RunConfig& cfg, const std::string& out_dir) {
  const std::vector<std::string> errs = validate_config(cfg);
  if (!errs.empty()) throw ConfigError(errs);

  const std::string dir = out_dir.empty() ? cfg.output.directory : out_dir;
  fs::create_directories(dir);

  const InitialData init = make_initial(cfg.initial, cfg.grid);
  SimState state;
  state.v = init.v;
  state.d = init.d;
  state.phys = cfg.physics;
  state.galerkin_n = cfg.grid.cutoff;
  if (!cfg.forcing.zero) {
    SpecVec g = read_snapshot(cfg.forcing.file, cfg.grid);
    leray_project(g);
    truncate(g, cfg.grid.cutoff);
    zero_mean(g);  // no mean forcing: the mean flow stays pinned at zero
    state.forcing = g;
    state.has_forcing = true;
  }

  RunResult res;
  res.norm_defect_initial = init.norm_defect_linf;
  EnergyLedger ledger;
  int snapshot_index = 0;
  const long nsteps = std::lround(cfg.time.t_end / cfg.time.dt);

  auto snapshot = [&](const SimState& s) {
    if (!cfg.output.snapshots) return;
    char tag[16];
    std::snprintf(tag, sizeof(tag), "_t%04d", snapshot_index);
    write_snapshot(dir + "/velocity" + tag, s.v, "velocity", s.t);
    write_snapshot(dir + "/director" + tag, s.d, "director", s.t);
    ++snapshot_index;
  };

  auto hook = [&](const SimState& s, int step_index) {
    DiagRow row = compute_row(s);
    ledger.push(row);
    res.rows.push_back(row);
    const bool at_edge = step_index == 0 || step_index == nsteps;
    const bool at_cadence = cfg.output.snapshot_cadence > 0 &&
                            step_index % cfg.output.snapshot_cadence == 0;
    if (at_edge || at_cadence) snapshot(s);
  };

  res.stats = run(state, cfg.time, cfg.output.cadence, hook);
  res.initial_energy = ledger.initial_energy();
  res.max_energy_residual = ledger.max_residual();
  res.inequality = energy_inequality_check(res.rows);

  {
    const SampleSet samples = samples_from_director(state.d);
    const PairingFunction fe =
        cfg.physics.model == EnergyModel::one_constant
            ? PairingFunction{"one_constant",
                              [K = cfg.physics.K](const Vec3&, const Mat3& S) {
                                return one_constant_density(K, S);
                              },
                              nullptr, false}
            : make_frank(cfg.physics.frank);
    res.frank_pairing_final = pairing_value(samples, fe);
    res.h2S2_pairing_final = pairing_value(samples, make_h2S2());
  }

  write_energy_csv(dir + "/energy.csv", res.rows);

  for (const std::string& extra : cfg.output.diagnostics) {
    if (extra == "defect_field") {
      const DefectEstimate de = defect_density(state.d, cfg.physics.reg.delta);
      // scalar field snapshot reuses the vector layout with one component
      std::vector<double> payload(de.density.a);
      std::ofstream bin(dir + "/defect_density.bin", std::ios::binary);
      bin.write(reinterpret_cast<const char*>(payload.data()),
                static_cast<std::streamsize>(payload.size() * sizeof(double)));
    } else if (extra == "young_histogram") {
      const EmpiricalYoungMeasure m =
          empirical_measure(samples_from_director(state.d));
      json h;
      h["bins"] = m.bins;
      h["total_mass"] = m.total_mass;
      h["radial_mass"] = m.radial_mass;
      write_text_file(dir + "/young_histogram.json", h.dump(2) + "\n");
    }
  }

  const DiagRow& last = res.rows.back();
  json summary;
  summary["config"] = json::parse(cfg.to_json());
  summary["steps"] = res.stats.steps;
  summary["initial_energy"] = res.initial_energy;
  summary["final_energy"] = last.energy.total;
  summary["max_energy_eq_residual"] = res.max_energy_residual;
  summary["final_norm_l2"] = last.norm_l2;
  summary["final_norm_linf"] = last.norm_linf;
  summary["final_defect_total"] = last.defect_total;
  summary["defect_total_lap"] = last.defect_total_lap;
  summary["initial_norm_defect_linf"] = res.norm_defect_initial;
  summary["max_div_defect"] = last.div_defect;
  summary["cfl_violations"] = res.stats.cfl_violations;
  summary["energy_inequality_holds"] = res.inequality.holds;
  summary["energy_inequality_min_margin"] = res.inequality.min_margin;
  summary["q_split_max_gap"] = res.inequality.max_q_split_gap;
  summary["frank_pairing_final"] = res.frank_pairing_final;
  summary["h2S2_pairing_final"] = res.h2S2_pairing_final;
  res.summary_json = summary.dump(2) + "\n";
  write_text_file(dir + "/run_summary.json", res.summary_json);
  return res;
}

namespace {

SweepRun sweep_member(RunConfig cfg, double delta, const std::string& dir) {
  cfg.physics.reg = RegularizationParams::make(delta, cfg.physics.reg.schedule);
  const RunResult r = run_simulation(cfg, dir);

  SweepRun out;
  out.delta = delta;
  out.epsilon = cfg.physics.reg.epsilon;
  out.max_energy_residual = r.max_energy_residual;
  out.initial_energy = r.initial_energy;
  double e0 = r.initial_energy;
  out.penalty_bound_margin = std::numeric_limits<double>::infinity();
  for (const DiagRow& row : r.rows) {
    out.max_norm_l2 = std::max(out.max_norm_l2, row.norm_l2);
    out.max_norm_linf = std::max(out.max_norm_linf, row.norm_linf);
    out.max_defect_total = std::max(out.max_defect_total, row.defect_total);
    out.max_defect_total_lap =
        std::max(out.max_defect_total_lap, row.defect_total_lap);
    const double gap = std::abs(row.defect_total - row.defect_total_lap) /
                       (row.defect_total + 1e-300);
    out.max_defect_gap = std::max(out.max_defect_gap, gap);
    out.penalty_bound_margin =
        std::min(out.penalty_bound_margin, e0 - row.energy.penalty);
  }
  out.final_norm_l2 = r.rows.back().norm_l2;
  out.frank_pairing_final = r.frank_pairing_final;
  out.h2S2_pairing_final = r.h2S2_pairing_final;
  return out;
}

}  // namespace

SweepResult delta_sweep(const RunConfig& base,
                        const std::vector<double>& deltas,
                        const std::string& out_root) {
  if (deltas.empty()) throw std::invalid_argument("empty delta list");
  for (double d : deltas)
    if (!(d > 0) || d > 1.0)
      throw ConfigError({"sweep deltas must lie in (0,1]"});
  for (std::size_t i = 1; i < deltas.size(); ++i)
    if (deltas[i] >= deltas[i - 1])
      throw ConfigError({"sweep deltas must be strictly decreasing"});

  fs::create_directories(out_root);
  int threads = 1;
  if (const char* env = std::getenv("EL_SIM_THREADS"))
    threads = std::max(1, std::atoi(env));

  SweepResult res;
  res.runs.resize(deltas.size());
  auto dir_for = [&](double d) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s/delta_%g", out_root.c_str(), d);
    return std::string(buf);
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < deltas.size(); ++i)
      res.runs[i] = sweep_member(base, deltas[i], dir_for(deltas[i]));
  } else {
    std::vector<std::future<SweepRun>> futs;
    for (std::size_t i = 0; i < deltas.size(); ++i)
      futs.push_back(std::async(std::launch::async, sweep_member, base,
                                deltas[i], dir_for(deltas[i])));
    for (std::size_t i = 0; i < deltas.size(); ++i) res.runs[i] = futs[i].get();
  }

  res.monotone_norm_decrease = true;
  for (std::size_t i = 1; i < res.runs.size(); ++i)
    if (res.runs[i].max_norm_l2 >= res.runs[i - 1].max_norm_l2)
      res.monotone_norm_decrease = false;

  res.seven_thirds_schedule =
      base.physics.reg.schedule == EpsSchedule::seven_thirds;
  res.equal_split = base.physics.model == EnergyModel::oseen_frank &&
                    base.physics.frank.split == SplitMode::equal_split;

  if (deltas.size() >= 4) {
    // least-squares slope of log(max norm) vs log(delta)
    auto fit = [&](auto value) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const double n = static_cast<double>(deltas.size());
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double x = std::log(deltas[i]);
        const double y = std::log(std::max(value(res.runs[i]), 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
      }
      const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      const double icept = (sy - slope * sx) / n;
      double rss = 0;
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double x = std::log(deltas[i]);
        const double y = std::log(std::max(value(res.runs[i]), 1e-300));
        const double e = y - (slope * x + icept);
        rss += e * e;
      }
      return std::pair<double, double>(slope, rss);
    };
    auto [s1, r1] = fit([](const SweepRun& r) { return r.max_norm_l2; });
    auto [s2, r2] = fit([](const SweepRun& r) { return r.final_norm_l2; });
    res.slope_max_norm = s1;
    res.slope_final_norm = s2;
    res.fit_residual = r1;
    res.slope_fitted = true;
  }

  json j;
  j["deltas"] = deltas;
  json runs = json::array();
  for (const SweepRun& r : res.runs) {
    json e;
    e["delta"] = r.delta;
    e["epsilon"] = r.epsilon;
    e["max_norm_l2"] = r.max_norm_l2;
    e["final_norm_l2"] = r.final_norm_l2;
    e["max_norm_linf"] = r.max_norm_linf;
    e["initial_energy"] = r.initial_energy;
    e["max_defect_total"] = r.max_defect_total;
    e["max_defect_total_lap"] = r.max_defect_total_lap;
    e["max_defect_gap"] = r.max_defect_gap;
    e["penalty_bound_margin"] = r.penalty_bound_margin;
    e["max_energy_eq_residual"] = r.max_energy_residual;
    e["frank_pairing_final"] = r.frank_pairing_final;
    e["h2S2_pairing_final"] = r.h2S2_pairing_final;
    runs.push_back(e);
  }
  j["runs"] = runs;
  j["monotone_norm_decrease"] = res.monotone_norm_decrease;
  if (res.slope_fitted) {
    j["slope_fit"] = {{"quantity", "norm_l2 vs delta (log-log)"},
                      {"slope_max_norm", res.slope_max_norm},
                      {"slope_final_norm", res.slope_final_norm},
                      {"residual", res.fit_residual}};
    j["delta_one_third_regime"] =
        res.seven_thirds_schedule && res.equal_split;
  }
  res.summary_json = j.dump(2) + "\n";
  write_text_file(out_root + "/sweep_summary.json", res.summary_json);
  return res;
}

}  // namespace elsim
