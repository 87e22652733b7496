// The full claims suite behind `verify-all`: every checkable statement
// about R(S4), the cohomology table, the K-ring presentation, the
// filtration quotients and the lens-space pullbacks, as named checks.

#pragma once

#include <string>
#include <vector>

namespace kbs4::verify {

struct Check {
  std::string name;    // stable identifier, e.g. "rring/d1^2=1"
  std::string claim;   // the mathematical statement being checked
  bool pass = false;
  std::string detail;  // short evidence or failure note
};

std::vector<Check> run_all_checks();

/// Expected rendering of H^{2j}(BS4) for 0 <= j <= 12, transcribed by hand
/// from the closed-form table; index is j.
const std::vector<std::string>& cohomology_expected_text();

}  // namespace kbs4::verify
