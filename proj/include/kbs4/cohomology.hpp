// Closed-form table of the even integral cohomology of BS4 over the
// generators a2, a3, a4, b4, and the comparison of its surviving part
// against the computed diagonal filtration quotients.

#pragma once

#include <string>
#include <vector>

#include "kbs4/kring.hpp"

namespace kbs4::cohomology {

struct CohomologySummand {
  int order = 0;          // 2, 3 or 4
  std::string generator;  // monomial label such as "a2^2*a4" or "b4^3"

  bool operator==(const CohomologySummand&) const = default;
};

/// H^{2j}(BS4). Degree 0 is the single free summand Z; every positive
/// even degree is pure torsion.
struct EvenCohomology {
  int j = 0;
  int free_rank = 0;  // 1 exactly when j == 0
  std::vector<CohomologySummand> summands;

  std::string to_string() const;  // "Z" or "Z2(a2^2) + Z4(a4) + Z3(b4)"
};

EvenCohomology even_cohomology(int j);  // j >= 0

struct SurvivalReport {
  int degree = 0;  // 2j
  std::vector<CohomologySummand> surviving;
  std::vector<CohomologySummand> dying;  // generator label involves a3
  std::vector<kring::Int> einf_orders;
  bool einf_match = false;
};

/// Splits H^{2j} into the a3-generated part (killed on the limit page) and
/// the rest, and checks that the survivors match einfinity(j, N) up to
/// abelian-group isomorphism. Requires N >= j.
SurvivalReport survival_compare(int j, int half_degree);

/// The 2-primary ring relations, kept as documentation only; they never
/// change the additive table.
const std::vector<std::string>& ring_relation_notes();

}  // namespace kbs4::cohomology
