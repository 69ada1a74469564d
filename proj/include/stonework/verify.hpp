#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stonework/numerics.hpp"

namespace stonework {

/// Outcome of one randomized property suite. `max_residual` is the largest
/// observed violation measure (0 for purely boolean checks); `detail` names
/// the first failing check, if any.
struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t samples = 0;
  double max_residual = 0.0;
  std::string detail;
};

using SuiteFn = SuiteResult (*)(std::uint64_t seed, Tolerance tol);

struct SuiteInfo {
  const char* name;
  SuiteFn run;
};

/// Every suite, in report order.
const std::vector<SuiteInfo>& property_suites();

/// Runs every suite with the same seed. Each suite derives its own stream
/// from (seed, suite index), so suites are independent of each other.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, Tolerance tol = {});

}  // namespace stonework
