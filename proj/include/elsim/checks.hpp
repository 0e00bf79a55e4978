// Built-in invariant suite behind `el-sim check`: tensor kernels against
// naive index-formula referees, derivative consistency by finite
// differences, stress identities and coercivity identities on random
// spectral fields. A fault-injection hook exists to prove the suite can
// fail.
#pragma once

#include <string>
#include <vector>

namespace elsim {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured value vs threshold
};

// filter: substring match on check names (empty runs everything);
// inject_fault: named corruption applied before checking, for testing the
// harness itself (supported: "lambda-symmetry")
std::vector<CheckResult> run_checks(const std::string& filter = "",
                                    const std::string& inject_fault = "");

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace elsim
