#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "elsim/driver.hpp"
#include "elsim/io.hpp"

using namespace elsim;
namespace fs = std::filesystem;

namespace {

std::string base_config_json(const std::string& outdir, double t_end,
                             int seed) {
  char buf[1024];
  std::snprintf(buf, sizeof(buf), R"json({
    "grid": {"N": 16},
    "physics": {"K1": 1.1, "K2": 0.9, "K3": 1.3,
                "mu1": 0.5, "mu2": -0.25, "mu3": 0.75, "mu4": 1.0,
                "mu5": 0.5, "mu6": 0.5, "lambda": 0.5,
                "delta": 0.05, "epsilon_schedule": "linear"},
    "time": {"dt": 1e-3, "t_end": %g},
    "initial": {"kind": "random_smooth", "seed": %d,
                "velocity_amplitude": 0.3, "director_amplitude": 0.2,
                "smoothness": 1.6},
    "output": {"directory": "%s", "cadence": 5}
  })json",
                t_end, seed, outdir.c_str());
  return buf;
}

std::string slurp(const std::string& path) { return read_text_file(path); }

}  // namespace

TEST_CASE("config parsing accepts a full document") {
  const RunConfig cfg = parse_config(base_config_json("/tmp/elsim_cfg", 0.01, 1));
  CHECK(cfg.grid.N == 16);
  CHECK(cfg.grid.cutoff == 5);
  CHECK(cfg.physics.frank.K1 == 1.1);
  CHECK(cfg.physics.reg.epsilon == 0.05);
  CHECK(cfg.time.dt == 1e-3);
  CHECK(validate(cfg.physics.leslie).parodi);
}

TEST_CASE("config rejection is total: every violation is listed") {
  const std::string bad = R"json({
    "grid": {"N": 7},
    "physics": {"K1": -1.0, "K2": 1.0, "K3": 1.0,
                "mu4": -2.0, "delta": 3.0},
    "time": {"dt": -1e-3, "t_end": -1.0},
    "initial": {"kind": "nonsense", "smoothness": -1.0}
  })json";
  try {
    parse_config(bad);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.violations.size() >= 7);
    bool grid = false, k = false, mu4 = false, delta = false, dt = false,
         tend = false, kind = false, smooth = false;
    for (const auto& v : e.violations) {
      grid |= v.find("grid.N") != std::string::npos;
      k |= v.find("K1,K2,K3") != std::string::npos;
      mu4 |= v.find("mu4") != std::string::npos;
      delta |= v.find("delta") != std::string::npos;
      dt |= v.find("time.dt") != std::string::npos;
      tend |= v.find("t_end") != std::string::npos;
      kind |= v.find("initial.kind") != std::string::npos;
      smooth |= v.find("smoothness") != std::string::npos;
    }
    CHECK(grid);
    CHECK(k);
    CHECK(mu4);
    CHECK(delta);
    CHECK(dt);
    CHECK(tend);
    CHECK(kind);
    CHECK(smooth);
  }
}

TEST_CASE("snapshot round-trip") {
  const TorusGrid g(16);
  const SpecVec f = random_smooth_vector(g, 7, 0.8, 2.0, g.cutoff);
  fs::create_directories("/tmp/elsim_io");
  write_snapshot("/tmp/elsim_io/probe", f, "director", 0.25);

  SUBCASE("stored samples are exactly the synthesized field") {
    const PhysVec p = to_phys(f);
    const std::string raw = slurp("/tmp/elsim_io/probe.bin");
    REQUIRE(raw.size() == 3 * g.phys_size() * sizeof(double));
    const double* vals = reinterpret_cast<const double*>(raw.data());
    for (std::size_t i = 0; i < g.phys_size(); ++i) {
      const Vec3 v = p.vec_at(i);
      CHECK(vals[3 * i + 0] == v[0]);
      CHECK(vals[3 * i + 1] == v[1]);
      CHECK(vals[3 * i + 2] == v[2]);
    }
    // spectral reconstruction is deterministic and exact to round-off
    const SpecVec back = read_snapshot("/tmp/elsim_io/probe", g);
    double worst = 0;
    for (std::size_t i = 0; i < f.a.size(); ++i)
      worst = std::max(worst, std::abs(f.a[i] - back.a[i]));
    CHECK(worst < 1e-14);
    // rewriting the same field reproduces the same bytes
    write_snapshot("/tmp/elsim_io/probe2", f, "director", 0.25);
    CHECK(slurp("/tmp/elsim_io/probe.bin") == slurp("/tmp/elsim_io/probe2.bin"));
  }
  SUBCASE("sidecar header accounts for the payload length") {
    const std::string header = slurp("/tmp/elsim_io/probe.json");
    CHECK(header.find("\"payload_bytes\": 98304") != std::string::npos);
    CHECK(fs::file_size("/tmp/elsim_io/probe.bin") == 98304);
    CHECK(header.find("float64") != std::string::npos);
    CHECK(header.find("little") != std::string::npos);
  }
  SUBCASE("grid mismatch is detected") {
    const TorusGrid g8(8);
    CHECK_THROWS(read_snapshot("/tmp/elsim_io/probe", g8));
  }
}

TEST_CASE("zero-length run emits one row and the initial snapshots") {
  fs::remove_all("/tmp/elsim_run0");
  const RunConfig cfg = parse_config(base_config_json("/tmp/elsim_run0", 0.0, 3));
  const RunResult res = run_simulation(cfg, "");
  CHECK(res.rows.size() == 1);
  const std::string csv = slurp("/tmp/elsim_run0/energy.csv");
  CHECK(csv.find(kEnergyCsvHeader) == 0);
  int lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 2);  // header + one row
  CHECK(fs::exists("/tmp/elsim_run0/velocity_t0000.bin"));
  CHECK(fs::exists("/tmp/elsim_run0/director_t0000.bin"));
  CHECK(fs::exists("/tmp/elsim_run0/run_summary.json"));
}

TEST_CASE("identical config and seed produce byte-identical artifacts") {
  fs::remove_all("/tmp/elsim_det_a");
  fs::remove_all("/tmp/elsim_det_b");
  const RunConfig cfg = parse_config(base_config_json("out", 0.01, 9));
  run_simulation(cfg, "/tmp/elsim_det_a");
  run_simulation(cfg, "/tmp/elsim_det_b");
  CHECK(slurp("/tmp/elsim_det_a/energy.csv") ==
        slurp("/tmp/elsim_det_b/energy.csv"));
  CHECK(slurp("/tmp/elsim_det_a/director_t0001.bin") ==
        slurp("/tmp/elsim_det_b/director_t0001.bin"));
  CHECK(slurp("/tmp/elsim_det_a/velocity_t0001.bin") ==
        slurp("/tmp/elsim_det_b/velocity_t0001.bin"));
  CHECK(slurp("/tmp/elsim_det_a/run_summary.json") ==
        slurp("/tmp/elsim_det_b/run_summary.json"));
}

TEST_CASE("unforced run writes a non-increasing total column") {
  fs::remove_all("/tmp/elsim_mono");
  const RunConfig cfg =
      parse_config(base_config_json("/tmp/elsim_mono", 0.02, 5));
  const RunResult res = run_simulation(cfg, "");
  const double e0 = res.rows.front().energy.total;
  for (std::size_t i = 1; i < res.rows.size(); ++i)
    CHECK(res.rows[i].energy.total <=
          res.rows[i - 1].energy.total + 1e-8 * e0);
}

TEST_CASE("sweep rejects invalid delta lists") {
  const RunConfig cfg =
      parse_config(base_config_json("/tmp/elsim_sweep_bad", 0.01, 5));
  CHECK_THROWS_AS(delta_sweep(cfg, {-0.1}, "/tmp/elsim_sweep_bad"),
                  ConfigError);
  CHECK_THROWS_AS(delta_sweep(cfg, {0.01, 0.1}, "/tmp/elsim_sweep_bad"),
                  ConfigError);
  CHECK_THROWS_AS(delta_sweep(cfg, {}, "/tmp/elsim_sweep_bad"),
                  std::invalid_argument);
}

TEST_CASE("single-delta sweep degenerates to a plain run plus summary") {
  fs::remove_all("/tmp/elsim_sweep1");
  const RunConfig cfg =
      parse_config(base_config_json("/tmp/elsim_sweep1_base", 0.01, 5));
  const SweepResult res = delta_sweep(cfg, {0.05}, "/tmp/elsim_sweep1");
  CHECK(res.runs.size() == 1);
  CHECK(!res.slope_fitted);
  CHECK(fs::exists("/tmp/elsim_sweep1/sweep_summary.json"));
  CHECK(fs::exists("/tmp/elsim_sweep1/delta_0.05/energy.csv"));
}
