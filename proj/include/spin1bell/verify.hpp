#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spin1bell {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest observed error (or the checked value)
  double tolerance = 0.0;
  std::string detail;
};

/// Randomized algebraic invariants of the rotation matrices, probability
/// tables and S functional, plus the exhaustive classical bound.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed);

}  // namespace spin1bell
