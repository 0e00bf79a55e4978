#include "elsim/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "elsim/leslie.hpp"

namespace elsim {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out = "invalid configuration:";
  for (const auto& s : v) out += "\n  - " + s;
  return out;
}

}  // namespace

ConfigError::ConfigError(const std::vector<std::string>& v)
    : std::runtime_error(join(v)), violations(v) {}

RunConfig parse_config(const std::string& json_text) {
  json j = json::parse(json_text);
  RunConfig cfg;
  std::vector<std::string> errs;

  try {
    const auto& g = j.at("grid");
    const int N = g.at("N").get<int>();
    const double L = g.value("L", two_pi);
    if (N < 8 || N % 2 != 0) errs.push_back("grid.N must be even and >= 8");
    if (!(L > 0)) errs.push_back("grid.L must be positive");
    if (errs.empty()) cfg.grid = TorusGrid(N, L);
  } catch (const json::exception& e) {
    errs.push_back(std::string("grid: ") + e.what());
  }

  try {
    const auto& p = j.at("physics");
    const std::string model = p.value("energy_model", "oseen_frank");
    if (model == "one_constant") {
      cfg.physics.model = EnergyModel::one_constant;
      cfg.physics.K = p.value("K", 1.0);
      if (!(cfg.physics.K > 0)) errs.push_back("physics.K must be positive");
    } else if (model == "oseen_frank") {
      cfg.physics.model = EnergyModel::oseen_frank;
      const double K1 = p.value("K1", 1.0);
      const double K2 = p.value("K2", 1.0);
      const double K3 = p.value("K3", 1.0);
      const std::string split = p.value("split_mode", "min_split");
      if (split != "min_split" && split != "equal_split")
        errs.push_back("physics.split_mode must be min_split or equal_split");
      if (!(K1 > 0) || !(K2 > 0) || !(K3 > 0)) {
        errs.push_back("physics.K1,K2,K3 must be positive");
      } else {
        cfg.physics.frank = FrankConstants(
            K1, K2, K3,
            split == "equal_split" ? SplitMode::equal_split
                                   : SplitMode::min_split);
      }
    } else {
      errs.push_back("physics.energy_model must be oseen_frank or one_constant");
    }

    LeslieCoefficients lc;
    lc.mu1 = p.value("mu1", 0.0);
    lc.mu2 = p.value("mu2", 0.0);
    lc.mu3 = p.value("mu3", 0.0);
    lc.mu4 = p.value("mu4", 1.0);
    lc.mu5 = p.value("mu5", 0.0);
    lc.mu6 = p.value("mu6", 0.0);
    lc.lambda = p.value("lambda", 0.0);
    cfg.physics.leslie = lc;
    const LeslieValidation lv = validate(lc);
    for (const auto& s : lv.violations()) errs.push_back("physics: " + s);

    const double delta = p.value("delta", 0.1);
    const std::string sched = p.value("epsilon_schedule", "linear");
    if (sched != "linear" && sched != "seven_thirds")
      errs.push_back("physics.epsilon_schedule must be linear or seven_thirds");
    if (!(delta > 0) || delta > 1.0) {
      errs.push_back("physics.delta must lie in (0,1]");
    } else if (p.contains("epsilon_override")) {
      const double eps = p.at("epsilon_override").get<double>();
      if (!(eps > 0)) {
        errs.push_back("physics.epsilon_override must be positive");
      } else {
        cfg.physics.reg = RegularizationParams::with_epsilon(delta, eps);
        cfg.physics.reg.schedule = sched == "seven_thirds"
                                       ? EpsSchedule::seven_thirds
                                       : EpsSchedule::linear;
      }
    } else {
      cfg.physics.reg = RegularizationParams::make(
          delta, sched == "seven_thirds" ? EpsSchedule::seven_thirds
                                         : EpsSchedule::linear);
    }
  } catch (const json::exception& e) {
    errs.push_back(std::string("physics: ") + e.what());
  }

  try {
    const auto& t = j.at("time");
    cfg.time.dt = t.at("dt").get<double>();
    cfg.time.t_end = t.at("t_end").get<double>();
    const std::string scheme = t.value("scheme", "imex1");
    if (scheme == "imex1")
      cfg.time.scheme = Scheme::imex1;
    else if (scheme == "rk4_explicit")
      cfg.time.scheme = Scheme::rk4_explicit;
    else
      errs.push_back("time.scheme must be imex1 or rk4_explicit");
    cfg.time.cfl_safety = t.value("cfl_safety", 1.0);
    cfg.time.freeze_velocity = t.value("freeze_velocity", false);
    if (!(cfg.time.dt > 0)) errs.push_back("time.dt must be positive");
    if (cfg.time.t_end < 0) errs.push_back("time.t_end must be nonnegative");
    if (!(cfg.time.cfl_safety > 0) || cfg.time.cfl_safety > 1.0)
      errs.push_back("time.cfl_safety must lie in (0,1]");
  } catch (const json::exception& e) {
    errs.push_back(std::string("time: ") + e.what());
  }

  try {
    const auto& i = j.at("initial");
    const std::string kind = i.value("kind", "constant");
    if (kind == "constant")
      cfg.initial.kind = InitialKind::constant;
    else if (kind == "random_smooth")
      cfg.initial.kind = InitialKind::random_smooth;
    else if (kind == "file")
      cfg.initial.kind = InitialKind::file;
    else
      errs.push_back("initial.kind must be constant, random_smooth or file");
    cfg.initial.seed = i.value("seed", 0ULL);
    if (i.contains("background")) {
      const auto b = i.at("background");
      cfg.initial.background = Vec3(b.at(0), b.at(1), b.at(2));
    }
    cfg.initial.velocity_amplitude = i.value("velocity_amplitude", 0.3);
    cfg.initial.director_amplitude = i.value("director_amplitude", 0.2);
    cfg.initial.smoothness = i.value("smoothness", 2.5);
    cfg.initial.velocity_file = i.value("velocity_file", "");
    cfg.initial.director_file = i.value("director_file", "");
    if (cfg.initial.velocity_amplitude < 0 ||
        cfg.initial.director_amplitude < 0)
      errs.push_back("initial amplitudes must be nonnegative");
    if (!(cfg.initial.smoothness > 0))
      errs.push_back("initial.smoothness must be positive");
    if (norm(cfg.initial.background) == 0)
      errs.push_back("initial.background must be a nonzero vector");
    if (cfg.initial.kind == InitialKind::file &&
        (cfg.initial.velocity_file.empty() ||
         cfg.initial.director_file.empty()))
      errs.push_back("initial.kind=file requires velocity_file and director_file");
  } catch (const json::exception& e) {
    errs.push_back(std::string("initial: ") + e.what());
  }

  if (j.contains("forcing")) {
    const auto& f = j.at("forcing");
    const std::string kind = f.value("kind", "zero");
    if (kind == "zero") {
      cfg.forcing.zero = true;
    } else if (kind == "file") {
      cfg.forcing.zero = false;
      cfg.forcing.file = f.value("file", "");
      if (cfg.forcing.file.empty())
        errs.push_back("forcing.kind=file requires forcing.file");
    } else {
      errs.push_back("forcing.kind must be zero or file");
    }
  }

  if (j.contains("output")) {
    const auto& o = j.at("output");
    cfg.output.directory = o.value("directory", "out");
    cfg.output.cadence = o.value("cadence", 10);
    cfg.output.snapshot_cadence = o.value("snapshot_cadence", 0);
    cfg.output.snapshots = o.value("snapshots", true);
    if (o.contains("diagnostics"))
      cfg.output.diagnostics =
          o.at("diagnostics").get<std::vector<std::string>>();
    if (cfg.output.cadence < 1) errs.push_back("output.cadence must be >= 1");
    if (cfg.output.snapshot_cadence < 0)
      errs.push_back("output.snapshot_cadence must be >= 0");
  }

  if (!errs.empty()) throw ConfigError(errs);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
  std::vector<std::string> errs;
  const LeslieValidation lv = validate(cfg.physics.leslie);
  for (const auto& s : lv.violations()) errs.push_back("physics: " + s);
  if (!(cfg.time.dt > 0)) errs.push_back("time.dt must be positive");
  if (cfg.time.t_end < 0) errs.push_back("time.t_end must be nonnegative");
  return errs;
}

std::string RunConfig::to_json() const {
  json j;
  j["grid"] = {{"N", grid.N}, {"L", grid.L}};
  json p;
  if (physics.model == EnergyModel::one_constant) {
    p["energy_model"] = "one_constant";
    p["K"] = physics.K;
  } else {
    p["energy_model"] = "oseen_frank";
    p["K1"] = physics.frank.K1;
    p["K2"] = physics.frank.K2;
    p["K3"] = physics.frank.K3;
    p["split_mode"] = physics.frank.split == SplitMode::equal_split
                          ? "equal_split"
                          : "min_split";
  }
  p["mu1"] = physics.leslie.mu1;
  p["mu2"] = physics.leslie.mu2;
  p["mu3"] = physics.leslie.mu3;
  p["mu4"] = physics.leslie.mu4;
  p["mu5"] = physics.leslie.mu5;
  p["mu6"] = physics.leslie.mu6;
  p["lambda"] = physics.leslie.lambda;
  p["delta"] = physics.reg.delta;
  p["epsilon"] = physics.reg.epsilon;
  p["epsilon_schedule"] = physics.reg.schedule == EpsSchedule::seven_thirds
                              ? "seven_thirds"
                              : "linear";
  j["physics"] = p;
  j["time"] = {{"dt", time.dt},
               {"t_end", time.t_end},
               {"scheme", time.scheme == Scheme::imex1 ? "imex1"
                                                       : "rk4_explicit"},
               {"cfl_safety", time.cfl_safety},
               {"freeze_velocity", time.freeze_velocity}};
  const char* kind = initial.kind == InitialKind::constant ? "constant"
                     : initial.kind == InitialKind::random_smooth
                         ? "random_smooth"
                         : "file";
  j["initial"] = {{"kind", kind},
                  {"seed", initial.seed},
                  {"background",
                   {initial.background[0], initial.background[1],
                    initial.background[2]}},
                  {"velocity_amplitude", initial.velocity_amplitude},
                  {"director_amplitude", initial.director_amplitude},
                  {"smoothness", initial.smoothness}};
  j["forcing"] = {{"kind", forcing.zero ? "zero" : "file"}};
  if (!forcing.zero) j["forcing"]["file"] = forcing.file;
  j["output"] = {{"directory", output.directory},
                 {"cadence", output.cadence},
                 {"snapshot_cadence", output.snapshot_cadence},
                 {"snapshots", output.snapshots}};
  return j.dump(2);
}

}  // namespace elsim
