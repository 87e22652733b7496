// Truncated K-rings of lens spaces, Z[mu] / ((1+mu)^n - 1, mu^{m+1}), as
// finite abelian groups, together with pullbacks of S4 classes along the
// cyclic subgroup inclusions and their orders.

#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "kbs4/intlinalg.hpp"
#include "kbs4/poly.hpp"

namespace kbs4::lens {

using intlinalg::Int;

class LensRing;

/// Reduced class in a lens ring: integer coefficients over mu^1..mu^m.
class LensElement {
 public:
  LensElement(std::shared_ptr<const LensRing> ring, std::vector<Int> coeffs);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  const LensRing& ring() const { return *ring_; }

  LensElement operator+(const LensElement& o) const;
  LensElement operator*(const LensElement& o) const;  // truncated product
  LensElement operator*(const Int& c) const;

  /// Canonical representative modulo the relation lattice.
  LensElement reduced() const;
  intlinalg::ElementOrder order() const;
  std::string to_string() const;  // "3*mu + mu^2"

 private:
  std::shared_ptr<const LensRing> ring_;
  std::vector<Int> coeffs_;
};

class LensRing : public std::enable_shared_from_this<LensRing> {
 public:
  /// K-ring of the 2m-skeleton of BZ_n. 2 <= n <= 12, 1 <= m <= 12.
  static std::shared_ptr<const LensRing> build(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const intlinalg::AbelianGroupPresentation& group() const { return group_; }
  const intlinalg::IntMatrix& relation_hermite_form() const { return hnf_; }

  LensElement zero() const;
  LensElement element(std::vector<Int> coeffs) const;
  /// (1+mu)^k - 1 truncated at mu^m.
  LensElement line_bundle_power(long long k) const;

 private:
  LensRing(int n, int m);

  int n_, m_;
  intlinalg::AbelianGroupPresentation group_;
  intlinalg::IntMatrix hnf_;
};

/// Pullback of a polynomial in v, phi, x, delta along BZ_n -> BS4, using
/// the restriction of the corresponding representations to the cyclic
/// subgroup generated by an n-cycle. n must be 2, 3 or 4.
LensElement pullback_from_s4(const poly::Poly& e, int n, int m);
LensElement pullback_from_s4(const std::string& e, int n, int m);

/// Order of the pullback in the lens ring group.
Int pullback_order(const poly::Poly& e, int n, int m);
Int pullback_order(const std::string& e, int n, int m);

}  // namespace kbs4::lens
