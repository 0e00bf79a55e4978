// el-sim: spectral Ericksen-Leslie simulator CLI.
//   el-sim check [--filter name] [--inject-fault name]
//   el-sim run --config cfg.json [--out dir]
//   el-sim sweep --config cfg.json --deltas 1e-1,3e-2,...
#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "elsim/checks.hpp"
#include "elsim/driver.hpp"
#include "elsim/io.hpp"

namespace {

std::vector<double> parse_deltas(const std::string& list) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t next = list.find(',', pos);
    if (next == std::string::npos) next = list.size();
    out.push_back(std::stod(list.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral Ericksen-Leslie simulator"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run the invariant suite");
  std::string filter, fault;
  check->add_option("--filter", filter, "substring filter on check names");
  check->add_option("--inject-fault", fault,
                    "corrupt a named invariant (harness self-test)");

  auto* runc = app.add_subcommand("run", "advance one configured simulation");
  std::string config_path, out_dir;
  runc->add_option("--config", config_path, "JSON config path")->required();
  runc->add_option("--out", out_dir, "output directory override");

  auto* sweep = app.add_subcommand("sweep", "run a regularization sweep");
  std::string sweep_config, deltas_arg, sweep_out;
  sweep->add_option("--config", sweep_config, "JSON config path")->required();
  sweep->add_option("--deltas", deltas_arg, "comma-separated decreasing list")
      ->required();
  sweep->add_option("--out", sweep_out, "output root override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      const auto results = elsim::run_checks(filter, fault);
      if (results.empty()) {
        std::fprintf(stderr, "no checks match filter '%s'\n", filter.c_str());
        return 2;
      }
      for (const auto& r : results)
        std::printf("[%s] %-32s %s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
      return elsim::all_pass(results) ? 0 : 1;
    }
    if (runc->parsed()) {
      const elsim::RunConfig cfg = elsim::load_config(config_path);
      const elsim::RunResult res = elsim::run_simulation(cfg, out_dir);
      std::printf("steps=%d E0=%s final_E=%s max_residual=%s\n",
                  res.stats.steps,
                  elsim::format_double(res.initial_energy).c_str(),
                  elsim::format_double(res.rows.back().energy.total).c_str(),
                  elsim::format_double(res.max_energy_residual).c_str());
      return 0;
    }
    if (sweep->parsed()) {
      const elsim::RunConfig cfg = elsim::load_config(sweep_config);
      const auto deltas = parse_deltas(deltas_arg);
      const std::string root =
          sweep_out.empty() ? cfg.output.directory : sweep_out;
      const elsim::SweepResult res = elsim::delta_sweep(cfg, deltas, root);
      for (const auto& r : res.runs)
        std::printf("delta=%g eps=%g max||.||=%g defect=%g\n", r.delta,
                    r.epsilon, r.max_norm_l2, r.max_defect_total);
      if (res.slope_fitted)
        std::printf("slope(max norm)=%g slope(final norm)=%g\n",
                    res.slope_max_norm, res.slope_final_norm);
      return 0;
    }
  } catch (const elsim::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
