// The reduced K-ring of BS4 as a presented ring Z[v, phi] with four
// relations, truncated models of skeleta as finite abelian groups, element
// orders, and the diagonal filtration quotients of the weighted monomial
// filtration (weight v = 2, weight x = 4, x = phi + v).

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "kbs4/intlinalg.hpp"
#include "kbs4/poly.hpp"

namespace kbs4::kring {

using intlinalg::Int;

struct RingPresentation {
  std::vector<std::string> relation_names;  // printable forms over v, phi
  std::vector<poly::Poly> relations_v_phi;
  std::vector<poly::Poly> relations_v_x;  // same relations with phi = x - v

  static const RingPresentation& standard();
};

/// delta = d2 - 2 expressed in the generators: 4*phi + phi^2 - 3*v - v*phi.
const poly::Poly& delta_in_v_phi();

/// Rewrites a polynomial in v, phi, x, delta into the (v, x) coordinates.
poly::Poly to_vx_coordinates(const poly::Poly& p);

struct RelationCheck {
  std::string name;
  bool substitution_zero = false;  // zero character under v -> d1-1, phi -> d3-3
  bool per_class_zero = false;     // plain integer evaluation per conjugacy class
};

/// Checks each presentation relation along both routes.
std::vector<RelationCheck> verify_presentation();

/// Finite abelian-group model of the reduced K-ring of the 2N-skeleton:
/// monomial basis v^a x^b with a + 2b <= N, (a, b) != (0, 0), modulo the
/// presentation relations multiplied by all monomials and the weight
/// truncation.
class TruncatedKRing {
 public:
  static TruncatedKRing build(int half_degree);  // N >= 0

  int half_degree() const { return n_; }
  std::size_t basis_size() const { return basis_.size(); }
  int weight(std::size_t i) const { return 2 * basis_[i].first + 4 * basis_[i].second; }
  std::string label(std::size_t i) const;
  const intlinalg::AbelianGroupPresentation& group() const { return group_; }

  /// Coefficient vector of p over the monomial basis (terms beyond the
  /// truncation weight drop). Throws std::domain_error on a nonzero
  /// constant term: only reduced (dimension-zero) classes live here.
  std::vector<Int> reduce(const poly::Poly& p) const;

  intlinalg::ElementOrder order_of(const poly::Poly& p) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> basis_;  // (a, b) exponents of v^a x^b
  intlinalg::AbelianGroupPresentation group_;
};

/// Order of the class e in the truncated model of the 2N-skeleton.
Int element_order_in_skeleton(const poly::Poly& e, int half_degree);
Int element_order_in_skeleton(const std::string& e, int half_degree);

struct FiltrationSummand {
  Int order;
  std::string generator;  // monomial label, empty when no clean witness exists
};

struct FiltrationQuotient {
  int degree = 0;  // 2j
  std::vector<FiltrationSummand> summands;  // invariant factors, ascending

  std::vector<Int> orders() const;
  std::string to_string() const;  // "Z2 + Z12"
};

/// F_{2j} / F_{2j+2} inside the truncation at half-degree N, where F_{2j}
/// is the subgroup generated by monomials of weight >= 2j. Requires
/// 1 <= j <= N.
FiltrationQuotient einfinity(int j, int half_degree);

/// True when the isomorphism type of einfinity(j, .) agrees at N and N+1.
bool einfinity_stable(int j, int half_degree);

/// True when v^j and (-2)^{j-1} v have equal characters.
bool power_identity_check(int j);

}  // namespace kbs4::kring
