#pragma once

#include "conicqed/numerics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace conicqed::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite with the given numerics. `quick` skips the
/// comparisons against the slow Bessel oracle and frozen reference values.
std::vector<CheckResult> selftest(const NumericsConfig &cfg, bool quick);

/// Prints one PASS/FAIL line per check; returns 0 iff all passed, else 1.
int run_selftest(const NumericsConfig &cfg, bool quick, std::ostream &out);

} // namespace conicqed::cli
