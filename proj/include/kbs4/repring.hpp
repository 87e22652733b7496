// Arithmetic in the representation ring R(S_n) through integer-valued
// characters: products, irreducible decomposition, relation checking,
// restriction to cyclic subgroups and subring generation tests.

#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kbs4/poly.hpp"
#include "kbs4/symchars.hpp"

namespace kbs4::repring {

using symchars::CharacterTable;
using symchars::Partition;

/// Element of R(S_n): an integer vector of values over the conjugacy
/// classes. Construction checks that the decomposition into irreducibles
/// is integral; unchecked() skips that for raw class functions.
class VirtualCharacter {
 public:
  VirtualCharacter(std::shared_ptr<const CharacterTable> table,
                   std::vector<long long> values);
  static VirtualCharacter unchecked(std::shared_ptr<const CharacterTable> table,
                                    std::vector<long long> values);
  static VirtualCharacter irreducible(std::shared_ptr<const CharacterTable> table,
                                      std::size_t index);
  static VirtualCharacter constant(std::shared_ptr<const CharacterTable> table,
                                   long long c);

  const std::vector<long long>& values() const { return values_; }
  const CharacterTable& table() const { return *table_; }
  std::shared_ptr<const CharacterTable> table_ptr() const { return table_; }
  long long dimension() const { return values_[table_->identity_class()]; }

  VirtualCharacter operator+(const VirtualCharacter& o) const;
  VirtualCharacter operator-(const VirtualCharacter& o) const;
  VirtualCharacter operator*(const VirtualCharacter& o) const;  // tensor product
  VirtualCharacter operator*(const poly::Int& c) const;
  VirtualCharacter pow(int e) const;
  bool operator==(const VirtualCharacter& o) const;

 private:
  VirtualCharacter() = default;
  void check_same_table(const VirtualCharacter& o) const;

  std::shared_ptr<const CharacterTable> table_;
  std::vector<long long> values_;
};

/// Coefficients of x over the irreducibles of its table; throws
/// std::domain_error when some inner product is not integral.
std::vector<long long> decompose(const VirtualCharacter& x);

/// Element of Z[zeta_n] in the power basis modulo the n-th cyclotomic
/// polynomial; coordinates have length phi(n) = deg Phi_n.
class CyclotomicVector {
 public:
  CyclotomicVector(int n, std::vector<long long> coords);
  static CyclotomicVector zero(int n);
  static CyclotomicVector zeta_power(int n, long long t);

  int modulus() const { return n_; }
  const std::vector<long long>& coords() const { return coords_; }
  bool is_zero() const;

  CyclotomicVector operator+(const CyclotomicVector& o) const;
  CyclotomicVector operator-(const CyclotomicVector& o) const;
  CyclotomicVector operator*(const CyclotomicVector& o) const;
  CyclotomicVector operator*(long long c) const;

 private:
  int n_;
  std::vector<long long> coords_;
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(int n);

/// Restriction of a character of Z_n to multiplicities of eta^0..eta^{n-1}.
struct CyclicDecomposition {
  int n = 0;
  std::vector<long long> multiplicities;

  long long total() const;  // = dimension of the restricted character
  CyclicDecomposition convolve(const CyclicDecomposition& o) const;  // product in Z[eta]/(eta^n - 1)
  std::string to_string() const;  // "1 + 2*eta"
  bool operator==(const CyclicDecomposition&) const = default;
};

/// Restricts x to the cyclic subgroup generated by a cycle_len-cycle.
/// Solves the defining equations sum_k m_k zeta^{jk} = x(c^j) as an exact
/// integer linear system in the cyclotomic power basis, then re-verifies
/// the solution modulo Phi_n. Throws std::domain_error when no integer
/// solution exists.
CyclicDecomposition restrict_to_cyclic(const VirtualCharacter& x, int cycle_len);

/// True when the character identity lhs = rhs holds under the bindings.
bool verify_relation(const poly::Poly& lhs, const poly::Poly& rhs,
                     const std::map<std::string, VirtualCharacter>& env);
bool verify_relation(const std::string& lhs, const std::string& rhs,
                     const std::map<std::string, VirtualCharacter>& env);

/// True when the unital subring generated by gens has full rank (= number
/// of conjugacy classes). Saturates the lattice of character vectors under
/// pointwise products until the rank stabilizes.
bool generates_ring(const std::vector<VirtualCharacter>& gens);

/// Shared S4 data: the table, the five irreducibles and the reduced
/// classes v = d1 - 1, delta = d2 - 2, phi = d3 - 3.
struct S4Context {
  std::shared_ptr<const CharacterTable> table;
  symchars::S4Irreps rows;
  VirtualCharacter one, d1, d2, d3, d1d3, v, delta, phi;

  static const S4Context& get();

  std::map<std::string, VirtualCharacter> irreducible_env() const;
  std::map<std::string, VirtualCharacter> reduced_env() const;
};

}  // namespace kbs4::repring
