#include "kbs4/intlinalg.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kbs4::intlinalg {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

namespace {

// Quotient truncated toward zero, so |a - q*b| < |b|.
Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Floor quotient, so a - q*b lies in [0, |b|) for b > 0.
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("from_rows: ragged row lengths");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void IntMatrix::append_row(const std::vector<Int>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("append_row: bad length");
  e_.insert(e_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) += c * at(k, j);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) += c * at(i, k);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : e_)
    if (v != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix w = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      w.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        // Bareiss: division by the previous pivot is exact.
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        w.at(i, j) = q;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix IntMatrix::parse_text(std::istream& in) {
  long long r = 0, c = 0;
  if (!(in >> r >> c) || r < 0 || c < 0)
    throw std::invalid_argument("matrix text: expected \"rows cols\" header");
  IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string tok;
      if (!(in >> tok)) throw std::invalid_argument("matrix text: too few entries");
      try {
        m.at(i, j) = Int(tok);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("matrix text: bad integer '" + tok + "'");
      }
    }
  return m;
}

std::vector<Int> mul_row_vector(const std::vector<Int>& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("row vector: bad length");
  std::vector<Int> out(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t mn = std::min(m, n);
  IntMatrix s = a;
  IntMatrix left = IntMatrix::identity(m);
  IntMatrix right = IntMatrix::identity(n);

  for (std::size_t t = 0; t < mn; ++t) {
    // Locate pivot: smallest nonzero |entry| in s[t.., t..], lowest index wins.
    auto find_pivot = [&](std::size_t& pi, std::size_t& pj) -> bool {
      bool found = false;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int& v = s.at(i, j);
          if (v == 0) continue;
          Int av = abs(v);
          if (!found || av < best) {
            found = true;
            best = av;
            pi = i;
            pj = j;
          }
        }
      return found;
    };

    std::size_t pi = t, pj = t;
    if (!find_pivot(pi, pj)) break;  // remaining block zero: trailing d are 0

    for (;;) {
      s.swap_rows(t, pi);
      left.swap_rows(t, pi);
      s.swap_cols(t, pj);
      right.swap_cols(t, pj);
      if (s.at(t, t) < 0) {
        s.negate_row(t);
        left.negate_row(t);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = tdiv(s.at(i, t), s.at(t, t));
        s.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) clean = false;
      }
      if (!clean) {
        if (!find_pivot(pi, pj)) throw std::logic_error("snf: pivot vanished");
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = tdiv(s.at(t, j), s.at(t, t));
        s.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        if (!find_pivot(pi, pj)) throw std::logic_error("snf: pivot vanished");
        continue;
      }

      // Pivot must divide the rest of the block before moving on.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides = false;
          }
      if (divides) break;
      if (!find_pivot(pi, pj)) throw std::logic_error("snf: pivot vanished");
    }
  }

  SmithDecomposition out;
  out.d.resize(mn);
  for (std::size_t i = 0; i < mn; ++i) out.d[i] = s.at(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntMatrix hermite_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    // Fold all entries of column j in rows >= r into one pivot row.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h.at(i, j) == 0) continue;
        if (best == m || abs(h.at(i, j)) < abs(h.at(best, j))) best = i;
      }
      if (best == m) break;  // column clear below r
      h.swap_rows(r, best);
      bool residue = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h.at(i, j) == 0) continue;
        Int q = tdiv(h.at(i, j), h.at(r, j));
        h.add_row_multiple(i, r, -q);
        if (h.at(i, j) != 0) residue = true;
      }
      if (!residue) break;
    }
    if (h.at(r, j) == 0) continue;  // no pivot in this column
    if (h.at(r, j) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(h.at(i, j), h.at(r, j));
      h.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  if (r == 0) return IntMatrix(0, n);
  IntMatrix trimmed(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) trimmed.at(i, j) = h.at(i, j);
  return trimmed;
}

std::vector<Int> reduce_mod_lattice(std::vector<Int> v, const IntMatrix& h) {
  if (v.size() != h.cols()) throw std::invalid_argument("reduce: bad length");
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(r, p) == 0) ++p;
    if (p == h.cols()) continue;
    Int q = fdiv(v[p], h.at(r, p));
    if (q == 0) continue;
    for (std::size_t j = 0; j < h.cols(); ++j) v[j] -= q * h.at(r, j);
  }
  return v;
}

AbelianGroupPresentation AbelianGroupPresentation::free_of_rank(std::size_t rank) {
  AbelianGroupPresentation p;
  p.rank = rank;
  p.relations = IntMatrix(0, rank);
  return p;
}

AbelianGroupPresentation AbelianGroupPresentation::with_relations(
    std::size_t rank, const std::vector<std::vector<Int>>& rows) {
  AbelianGroupPresentation p;
  p.rank = rank;
  p.relations = IntMatrix(0, rank);
  for (const auto& r : rows) {
    if (r.size() != rank)
      throw std::invalid_argument("relation length differs from rank");
    p.relations.append_row(r);
  }
  return p;
}

ElementOrder ElementOrder::of(Int k) {
  if (k <= 0) throw std::invalid_argument("order must be positive");
  ElementOrder o;
  o.finite_ = true;
  o.value_ = std::move(k);
  return o;
}

const Int& ElementOrder::value() const {
  if (!finite_) throw std::logic_error("infinite order has no value");
  return value_;
}

std::string ElementOrder::to_string() const {
  return finite_ ? value_.get_str() : std::string("infinite");
}

std::vector<Int> group_structure(const AbelianGroupPresentation& p) {
  if (p.relations.cols() != p.rank)
    throw std::invalid_argument("presentation: relations.cols != rank");
  SmithDecomposition snf = smith_normal_form(p.relations);
  std::vector<Int> out;
  std::size_t nonzero = 0;
  for (const Int& d : snf.d) {
    if (d == 0) break;
    ++nonzero;
    if (d > 1) out.push_back(d);
  }
  for (std::size_t i = nonzero; i < p.rank; ++i) out.push_back(0);
  return out;
}

Int order_from_structure(const std::vector<Int>& structure) {
  Int total = 1;
  for (const Int& d : structure) {
    if (d == 0) return 0;
    total *= d;
  }
  return total;
}

ElementOrder element_order(const AbelianGroupPresentation& p,
                           const std::vector<Int>& e) {
  if (e.size() != p.rank)
    throw std::invalid_argument("element length differs from rank");
  SmithDecomposition snf = smith_normal_form(p.relations);
  // y is in the row lattice iff (y * right) is divisible coordinate-wise by d.
  std::vector<Int> w = mul_row_vector(e, snf.right);
  const std::size_t mn = snf.d.size();
  Int k = 1;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Int dj = j < mn ? snf.d[j] : Int(0);
    if (dj == 0) {
      if (w[j] != 0) return ElementOrder::infinite();
      continue;
    }
    Int g = gcd(dj, w[j]);
    k = lcm(k, dj / g);
  }
  return ElementOrder::of(k);
}

AbelianGroupPresentation subgroup_quotient(
    const AbelianGroupPresentation& p,
    const std::vector<std::vector<Int>>& gens,
    const std::vector<std::vector<Int>>& sub_gens) {
  IntMatrix stacked(0, p.rank);
  for (const auto& g : gens) {
    if (g.size() != p.rank) throw std::invalid_argument("gens: bad length");
    stacked.append_row(g);
  }
  for (const auto& g : sub_gens) {
    if (g.size() != p.rank) throw std::invalid_argument("sub_gens: bad length");
    stacked.append_row(g);
  }
  for (std::size_t i = 0; i < p.relations.rows(); ++i)
    stacked.append_row(p.relations.row(i));

  // Relations of the quotient: c such that c . gens lies in the lattice
  // spanned by sub_gens and the ambient relations. These are the first
  // gens.size() coordinates of the left kernel of the stacked matrix.
  SmithDecomposition snf = smith_normal_form(stacked);
  std::size_t nonzero = 0;
  for (const Int& d : snf.d)
    if (d != 0) ++nonzero;

  const std::size_t g = gens.size();
  AbelianGroupPresentation q;
  q.rank = g;
  q.relations = IntMatrix(0, g);
  for (std::size_t i = nonzero; i < stacked.rows(); ++i) {
    std::vector<Int> rel(g);
    for (std::size_t j = 0; j < g; ++j) rel[j] = snf.left.at(i, j);
    q.relations.append_row(rel);
  }
  return q;
}

std::optional<std::vector<Int>> solve(const IntMatrix& a,
                                      const std::vector<Int>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: bad rhs length");
  SmithDecomposition snf = smith_normal_form(a);
  // A x = b  <=>  D u = left * b with x = right * u.
  std::vector<Int> c(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) c[i] += snf.left.at(i, j) * b[j];

  std::vector<Int> u(a.cols(), Int(0));
  const std::size_t mn = snf.d.size();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < mn && snf.d[i] != 0) {
      if (c[i] % snf.d[i] != 0) return std::nullopt;
      u[i] = c[i] / snf.d[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) x[i] += snf.right.at(i, j) * u[j];
  return x;
}

std::vector<Int> invariant_factors_of_cyclic_sum(std::vector<Int> orders) {
  // Collect prime-power exponents per prime, then stack largest-first.
  std::map<Int, std::vector<int>> primes;
  for (Int n : orders) {
    if (n <= 1) continue;
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      primes[p].push_back(e);
    }
    if (n > 1) primes[n].push_back(1);
  }
  std::size_t count = 0;
  for (auto& [p, es] : primes) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    count = std::max(count, es.size());
  }
  std::vector<Int> factors(count, Int(1));
  for (auto& [p, es] : primes)
    for (std::size_t i = 0; i < es.size(); ++i) {
      Int pe = 1;
      for (int k = 0; k < es[i]; ++k) pe *= p;
      factors[count - 1 - i] *= pe;  // largest exponents into the last factor
    }
  return factors;
}

}  // namespace kbs4::intlinalg
