// Exact integer linear algebra: Smith normal form with unimodular
// transforms, finitely generated abelian groups presented by relation
// matrices, and element-order queries in the cokernel.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kbs4::intlinalg {

using Int = mpz_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Dense matrix over arbitrary-precision integers, row-major.
/// Zero-row and zero-column shapes are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  void append_row(const std::vector<Int>& r);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void negate_row(std::size_t i);
  // row[i] += c * row[k]
  void add_row_multiple(std::size_t i, std::size_t k, const Int& c);
  // col[j] += c * col[k]
  void add_col_multiple(std::size_t j, std::size_t k, const Int& c);

  bool is_diagonal() const;
  bool is_zero() const;

  /// Exact determinant by fraction-free (Bareiss) elimination. Square only.
  Int determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool operator==(const IntMatrix&) const = default;

  /// Exchange format: first line "rows cols", then one line per row.
  std::string to_text() const;
  static IntMatrix parse_text(std::istream& in);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

// v * M for a row vector v of length M.rows().
std::vector<Int> mul_row_vector(const std::vector<Int>& v, const IntMatrix& m);

struct SmithDecomposition {
  std::vector<Int> d;  // invariant factors, d[i] | d[i+1], all >= 0
  IntMatrix left;      // unimodular rows x rows
  IntMatrix right;     // unimodular cols x cols
};

/// left * A * right is diagonal with diagonal d (length min(rows, cols)).
/// Pivot rule: smallest nonzero absolute value in the working submatrix,
/// ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite form of the row lattice of A: zero rows dropped,
/// pivots positive, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_form(const IntMatrix& a);

/// Canonical coset representative of v modulo the row lattice of H,
/// where H is a hermite_form() output.
std::vector<Int> reduce_mod_lattice(std::vector<Int> v, const IntMatrix& h);

/// Finitely generated abelian group Z^rank / (row lattice of relations).
struct AbelianGroupPresentation {
  std::size_t rank = 0;
  IntMatrix relations;  // relations.cols == rank, one relation per row

  static AbelianGroupPresentation free_of_rank(std::size_t rank);
  static AbelianGroupPresentation with_relations(
      std::size_t rank, const std::vector<std::vector<Int>>& rows);
};

/// Order of a group element: either a positive integer or infinite.
class ElementOrder {
 public:
  static ElementOrder infinite() { return ElementOrder(); }
  static ElementOrder of(Int k);

  bool is_finite() const { return finite_; }
  const Int& value() const;  // throws std::logic_error when infinite

  bool operator==(const ElementOrder&) const = default;
  std::string to_string() const;

 private:
  ElementOrder() = default;
  bool finite_ = false;
  Int value_ = 0;
};

/// Isomorphism type of the cokernel: invariant factors > 1 in divisibility
/// order, then one 0 entry per free (infinite cyclic) factor.
std::vector<Int> group_structure(const AbelianGroupPresentation& p);

/// Product of the orders in a group_structure() result; 0 when infinite.
Int order_from_structure(const std::vector<Int>& structure);

/// Smallest k >= 1 with k*e in the row lattice of p.relations.
ElementOrder element_order(const AbelianGroupPresentation& p,
                           const std::vector<Int>& e);

/// Presents (subgroup generated by gens + relations) /
///          (subgroup generated by sub_gens + relations).
/// The result has one generator per entry of gens.
AbelianGroupPresentation subgroup_quotient(
    const AbelianGroupPresentation& p,
    const std::vector<std::vector<Int>>& gens,
    const std::vector<std::vector<Int>>& sub_gens);

/// Solves A x = b over the integers; nullopt when no integer solution.
std::optional<std::vector<Int>> solve(const IntMatrix& a,
                                      const std::vector<Int>& b);

/// Invariant factors (ascending) of a direct sum of cyclic groups of the
/// given finite orders; entries <= 1 are dropped.
std::vector<Int> invariant_factors_of_cyclic_sum(std::vector<Int> orders);

}  // namespace kbs4::intlinalg
