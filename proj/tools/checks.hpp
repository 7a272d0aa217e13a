#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bigwitt::checks {

struct CheckOptions {
  std::uint64_t seed = 1;
  /// Multiplies every random sample count (at least one sample is kept).
  double scale = 1.0;
};

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string id;
  std::string name;
  std::function<Outcome(const CheckOptions&)> run;
};

/// The nine acceptance criteria, in order AC1..AC9.
std::vector<Check> acceptance_criteria();

/// Property suites by module name: algebra-core, mseries, witt-lambda,
/// ptypical, duality, cft; "all" runs every suite.
std::vector<std::string> suite_names();
/// Throws InvalidInput for an unknown suite.
std::vector<Check> suite(const std::string& name);

/// Runs a check, turning a library error into a failing result.
CheckResult run_check(const Check& check, const CheckOptions& opts);

}  // namespace bigwitt::checks
