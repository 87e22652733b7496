#include "kbs4/repring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kbs4/intlinalg.hpp"

namespace kbs4::repring {

using intlinalg::Int;
using intlinalg::IntMatrix;

VirtualCharacter::VirtualCharacter(std::shared_ptr<const CharacterTable> table,
                                   std::vector<long long> values) {
  table_ = std::move(table);
  values_ = std::move(values);
  if (values_.size() != table_->classes.size())
    throw std::invalid_argument("character: wrong number of class values");
  decompose(*this);  // throws when not an integral combination of irreducibles
}

VirtualCharacter VirtualCharacter::unchecked(
    std::shared_ptr<const CharacterTable> table, std::vector<long long> values) {
  VirtualCharacter x;
  x.table_ = std::move(table);
  x.values_ = std::move(values);
  if (x.values_.size() != x.table_->classes.size())
    throw std::invalid_argument("character: wrong number of class values");
  return x;
}

VirtualCharacter VirtualCharacter::irreducible(
    std::shared_ptr<const CharacterTable> table, std::size_t index) {
  auto values = table->values.at(index);
  return unchecked(std::move(table), std::move(values));
}

VirtualCharacter VirtualCharacter::constant(
    std::shared_ptr<const CharacterTable> table, long long c) {
  std::vector<long long> values(table->classes.size(), c);
  return unchecked(std::move(table), std::move(values));
}

void VirtualCharacter::check_same_table(const VirtualCharacter& o) const {
  if (table_->n != o.table_->n)
    throw std::invalid_argument("characters live over different groups");
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
  check_same_table(o);
  std::vector<long long> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return unchecked(table_, std::move(v));
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
  check_same_table(o);
  std::vector<long long> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] - o.values_[i];
  return unchecked(table_, std::move(v));
}

VirtualCharacter VirtualCharacter::operator*(const VirtualCharacter& o) const {
  check_same_table(o);
  std::vector<long long> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
  return unchecked(table_, std::move(v));
}

VirtualCharacter VirtualCharacter::operator*(const poly::Int& c) const {
  if (!c.fits_slong_p()) throw std::invalid_argument("scalar too large");
  long long k = c.get_si();
  std::vector<long long> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * k;
  return unchecked(table_, std::move(v));
}

VirtualCharacter VirtualCharacter::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  VirtualCharacter out = constant(table_, 1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool VirtualCharacter::operator==(const VirtualCharacter& o) const {
  return table_->n == o.table_->n && values_ == o.values_;
}

std::vector<long long> decompose(const VirtualCharacter& x) {
  const CharacterTable& t = x.table();
  const long long order = std::accumulate(t.class_sizes.begin(),
                                          t.class_sizes.end(), 0LL);
  std::vector<long long> coeffs;
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    long long dot = 0;
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      dot += t.class_sizes[c] * x.values()[c] * t.values[i][c];
    if (dot % order != 0)
      throw std::domain_error("not an integral combination of irreducibles");
    coeffs.push_back(dot / order);
  }
  return coeffs;
}

namespace {

// (x^n - 1) / (x^d - 1)-style exact division of integer polynomials,
// constant term first; divisor must be monic.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  if (den.back() != 1) throw std::logic_error("poly_div_exact: divisor not monic");
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  for (long long c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: remainder");
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("cyclotomic: need 1 <= n <= 64");
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

CyclotomicVector::CyclotomicVector(int n, std::vector<long long> coords)
    : n_(n), coords_(std::move(coords)) {
  const std::size_t deg = cyclotomic_polynomial(n).size() - 1;
  if (coords_.size() != deg)
    throw std::invalid_argument("cyclotomic vector: wrong length");
}

CyclotomicVector CyclotomicVector::zero(int n) {
  const std::size_t deg = cyclotomic_polynomial(n).size() - 1;
  return CyclotomicVector(n, std::vector<long long>(deg, 0));
}

namespace {

// Reduces an integer polynomial (constant term first) modulo Phi_n and
// returns the residue coordinates of length deg Phi_n.
std::vector<long long> reduce_mod_cyclotomic(std::vector<long long> p, int n) {
  const std::vector<long long> phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    long long c = p[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= deg; ++k) p[i - deg + k] -= c * phi[k];
  }
  p.resize(deg, 0);
  return p;
}

}  // namespace

CyclotomicVector CyclotomicVector::zeta_power(int n, long long t) {
  long long r = ((t % n) + n) % n;
  std::vector<long long> p(static_cast<std::size_t>(r) + 1, 0);
  p[static_cast<std::size_t>(r)] = 1;
  return CyclotomicVector(n, reduce_mod_cyclotomic(std::move(p), n));
}

bool CyclotomicVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](long long c) { return c == 0; });
}

CyclotomicVector CyclotomicVector::operator+(const CyclotomicVector& o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic moduli differ");
  std::vector<long long> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
  return CyclotomicVector(n_, std::move(c));
}

CyclotomicVector CyclotomicVector::operator-(const CyclotomicVector& o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic moduli differ");
  std::vector<long long> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
  return CyclotomicVector(n_, std::move(c));
}

CyclotomicVector CyclotomicVector::operator*(const CyclotomicVector& o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic moduli differ");
  std::vector<long long> prod(coords_.size() + o.coords_.size(), 0);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    for (std::size_t j = 0; j < o.coords_.size(); ++j)
      prod[i + j] += coords_[i] * o.coords_[j];
  return CyclotomicVector(n_, reduce_mod_cyclotomic(std::move(prod), n_));
}

CyclotomicVector CyclotomicVector::operator*(long long c) const {
  std::vector<long long> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] * c;
  return CyclotomicVector(n_, std::move(out));
}

long long CyclicDecomposition::total() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0LL);
}

CyclicDecomposition CyclicDecomposition::convolve(const CyclicDecomposition& o) const {
  if (n != o.n) throw std::invalid_argument("convolve: different cyclic orders");
  CyclicDecomposition out{n, std::vector<long long>(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.multiplicities[static_cast<std::size_t>((i + j) % n)] +=
          multiplicities[static_cast<std::size_t>(i)] *
          o.multiplicities[static_cast<std::size_t>(j)];
  return out;
}

std::string CyclicDecomposition::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < n; ++k) {
    long long m = multiplicities[static_cast<std::size_t>(k)];
    if (m == 0) continue;
    if (first) {
      if (m < 0) os << '-';
    } else {
      os << (m < 0 ? " - " : " + ");
    }
    first = false;
    long long a = m < 0 ? -m : m;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << "eta";
      if (k != 1) os << '^' << k;
    }
  }
  if (first) os << '0';
  return os.str();
}

CyclicDecomposition restrict_to_cyclic(const VirtualCharacter& x, int cycle_len) {
  const CharacterTable& t = x.table();
  if (cycle_len < 2 || cycle_len > t.n)
    throw std::invalid_argument("restrict: cycle length out of range");
  const int n = cycle_len;
  const std::size_t deg = cyclotomic_polynomial(n).size() - 1;

  // One cyclotomic equation per power of the cycle, expanded to deg
  // integer equations in the power basis.
  IntMatrix a(static_cast<std::size_t>(n) * deg, static_cast<std::size_t>(n));
  std::vector<Int> b(static_cast<std::size_t>(n) * deg, Int(0));
  std::vector<long long> values_on_powers(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Partition type = symchars::power_cycle_type(n, j, t.n);
    const long long value = x.values()[t.class_index(type)];
    values_on_powers[static_cast<std::size_t>(j)] = value;
    for (int k = 0; k < n; ++k) {
      CyclotomicVector z = CyclotomicVector::zeta_power(n, static_cast<long long>(j) * k);
      for (std::size_t r = 0; r < deg; ++r)
        a.at(static_cast<std::size_t>(j) * deg + r, static_cast<std::size_t>(k)) =
            static_cast<long>(z.coords()[r]);
    }
    b[static_cast<std::size_t>(j) * deg] = static_cast<long>(value);
  }

  auto solution = intlinalg::solve(a, b);
  if (!solution)
    throw std::domain_error("restriction has no integer solution");

  CyclicDecomposition out{n, {}};
  for (const Int& m : *solution) {
    if (!m.fits_slong_p()) throw std::logic_error("restriction multiplicity overflow");
    out.multiplicities.push_back(m.get_si());
  }

  // Independent re-check modulo Phi_n.
  for (int j = 0; j < n; ++j) {
    CyclotomicVector acc = CyclotomicVector::zero(n);
    for (int k = 0; k < n; ++k)
      acc = acc + CyclotomicVector::zeta_power(n, static_cast<long long>(j) * k) *
                      out.multiplicities[static_cast<std::size_t>(k)];
    CyclotomicVector expect = CyclotomicVector::zeta_power(n, 0) *
                              values_on_powers[static_cast<std::size_t>(j)];
    if (!(acc - expect).is_zero())
      throw std::logic_error("restriction failed cyclotomic re-check");
  }
  return out;
}

bool verify_relation(const poly::Poly& lhs, const poly::Poly& rhs,
                     const std::map<std::string, VirtualCharacter>& env) {
  if (env.empty()) throw std::invalid_argument("verify_relation: empty binding");
  const VirtualCharacter& any = env.begin()->second;
  VirtualCharacter zero = VirtualCharacter::constant(any.table_ptr(), 0);
  VirtualCharacter unit = VirtualCharacter::constant(any.table_ptr(), 1);
  VirtualCharacter l = poly::eval(lhs, env, zero, &unit);
  VirtualCharacter r = poly::eval(rhs, env, zero, &unit);
  return l == r;
}

bool verify_relation(const std::string& lhs, const std::string& rhs,
                     const std::map<std::string, VirtualCharacter>& env) {
  return verify_relation(poly::parse(lhs), poly::parse(rhs), env);
}

bool generates_ring(const std::vector<VirtualCharacter>& gens) {
  if (gens.empty()) throw std::invalid_argument("generates_ring: no generators");
  const CharacterTable& t = gens.front().table();
  const std::size_t classes = t.classes.size();

  auto to_row = [&](const std::vector<long long>& values) {
    std::vector<Int> row;
    row.reserve(values.size());
    for (long long v : values) row.emplace_back(static_cast<long>(v));
    return row;
  };

  IntMatrix lattice(0, classes);
  lattice.append_row(std::vector<Int>(classes, Int(1)));  // the unit
  for (const auto& g : gens) {
    if (g.table().n != t.n)
      throw std::invalid_argument("generates_ring: mixed tables");
    lattice.append_row(to_row(g.values()));
  }

  IntMatrix basis = intlinalg::hermite_form(lattice);
  for (;;) {
    const std::size_t rank = basis.rows();
    IntMatrix extended = basis;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = i; j < rank; ++j) {
        std::vector<Int> prod(classes);
        for (std::size_t c = 0; c < classes; ++c)
          prod[c] = basis.at(i, c) * basis.at(j, c);
        extended.append_row(prod);
      }
    basis = intlinalg::hermite_form(extended);
    if (basis.rows() == rank) break;  // Q-span stabilized
  }
  return basis.rows() == classes;
}

const S4Context& S4Context::get() {
  static const S4Context ctx = [] {
    auto table = symchars::character_table(4);
    auto rows = symchars::identify_s4_irreps(*table);
    VirtualCharacter one = VirtualCharacter::irreducible(table, rows.one);
    VirtualCharacter d1 = VirtualCharacter::irreducible(table, rows.d1);
    VirtualCharacter d2 = VirtualCharacter::irreducible(table, rows.d2);
    VirtualCharacter d3 = VirtualCharacter::irreducible(table, rows.d3);
    VirtualCharacter d1d3 = VirtualCharacter::irreducible(table, rows.d1d3);
    VirtualCharacter v = d1 - one;
    VirtualCharacter delta = d2 - VirtualCharacter::constant(table, 2);
    VirtualCharacter phi = d3 - VirtualCharacter::constant(table, 3);
    return S4Context{table, rows, one, d1, d2, d3, d1d3, v, delta, phi};
  }();
  return ctx;
}

std::map<std::string, VirtualCharacter> S4Context::irreducible_env() const {
  return {{"d1", d1}, {"d2", d2}, {"d3", d3}};
}

std::map<std::string, VirtualCharacter> S4Context::reduced_env() const {
  return {{"v", v}, {"delta", delta}, {"phi", phi}};
}

}  // namespace kbs4::repring
