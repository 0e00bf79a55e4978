// Run configuration: one JSON document describing grid, physics, time
// stepping, initial data, forcing and outputs. Validation is total: every
// violated constraint is collected and reported, nothing is silently
// clamped.
#pragma once

#include <string>
#include <vector>

#include "elsim/initial.hpp"
#include "elsim/integrator.hpp"

namespace elsim {

struct OutputConfig {
  std::string directory = "out";
  int cadence = 10;           // diagnostic rows every this many steps
  int snapshot_cadence = 0;   // 0: initial+final only
  bool snapshots = true;
  std::vector<std::string> diagnostics;  // optional extras: "defect_field",
                                         // "young_histogram"
};

struct ForcingConfig {
  bool zero = true;
  std::string file;
};

struct RunConfig {
  TorusGrid grid{16};
  PhysicsParams physics;
  StepperConfig time;
  InitialConfig initial;
  ForcingConfig forcing;
  OutputConfig output;

  std::string to_json() const;  // canonical echo used in summaries
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::vector<std::string>& violations);
  std::vector<std::string> violations;
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// collected constraint violations; empty means valid
std::vector<std::string> validate_config(const RunConfig& cfg);

}  // namespace elsim
