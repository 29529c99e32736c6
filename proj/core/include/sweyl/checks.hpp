#pragma once

#include <string>
#include <vector>

namespace sweyl::checks {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double max_err = 0.0;
  double tolerance = 0.0;
  std::string detail;  // set when a check aborts with an error
};

std::vector<std::string> suite_names();  // excludes "all"

/// Runs one named invariant suite ("grid", "states", "transform", "symbol",
/// "star", "dynamics", "moments") or "all".
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace sweyl::checks
