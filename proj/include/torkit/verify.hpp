#pragma once

// The identity suite behind `torkit verify`.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torkit/families.hpp"

namespace torkit {

struct CheckResult {
  std::string name;  // "<kind>/<subject>", e.g. "closed-form/jones"
  bool passed = true;
  std::string scope;  // what was covered, e.g. "n=1..21 odd"
  // First counterexample when !passed.
  std::optional<unsigned> failing_n;
  std::string expected;
  std::string actual;
  std::string note;
};

/// Runs every check for n up to n_max (odd, >= 3) against the given families.
/// Results are sorted by check name.
std::vector<CheckResult> run_verification(unsigned n_max, std::span<const FamilySpec> families);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace torkit
