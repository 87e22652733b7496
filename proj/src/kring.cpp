#include "kbs4/kring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kbs4/repring.hpp"

namespace kbs4::kring {

using intlinalg::AbelianGroupPresentation;
using intlinalg::ElementOrder;
using poly::Poly;

const RingPresentation& RingPresentation::standard() {
  static const RingPresentation p = [] {
    RingPresentation out;
    out.relation_names = {
        "2*v + v^2",
        "12*phi + 7*phi^2 + phi^3 - 4*v - v*phi",
        "24*phi + 26*phi^2 + 9*phi^3 + phi^4",
        "2*v*phi - 8*v - 24*phi^2 - 14*phi^3 - 2*phi^4 + v*phi^2",
    };
    const std::map<std::string, Poly> phi_to_x = {
        {"phi", poly::parse("x - v")}};
    const auto& ctx = repring::S4Context::get();
    auto env = ctx.reduced_env();
    auto zero = repring::VirtualCharacter::constant(ctx.table, 0);
    auto unit = repring::VirtualCharacter::constant(ctx.table, 1);
    for (const auto& name : out.relation_names) {
      Poly r = poly::parse(name);
      if (!(poly::eval(r, env, zero, &unit) == zero))
        throw std::logic_error("presentation relation fails in R(S4): " + name);
      out.relations_v_phi.push_back(r);
      out.relations_v_x.push_back(r.substitute(phi_to_x));
    }
    return out;
  }();
  return p;
}

const Poly& delta_in_v_phi() {
  static const Poly d = poly::parse("4*phi + phi^2 - 3*v - v*phi");
  return d;
}

Poly to_vx_coordinates(const Poly& p) {
  Poly step = p.substitute({{"delta", delta_in_v_phi()}});
  Poly out = step.substitute({{"phi", poly::parse("x - v")}});
  for (const auto& [mono, coeff] : out.terms())
    for (const auto& [var, e] : mono)
      if (var != "v" && var != "x")
        throw std::invalid_argument("unbound generator: " + var);
  return out;
}

std::vector<RelationCheck> verify_presentation() {
  const auto& ctx = repring::S4Context::get();
  const auto& pres = RingPresentation::standard();
  auto env = ctx.reduced_env();

  std::vector<RelationCheck> out;
  for (std::size_t i = 0; i < pres.relations_v_phi.size(); ++i) {
    RelationCheck check;
    check.name = pres.relation_names[i];

    // Route 1: evaluate in the character ring.
    auto zero = repring::VirtualCharacter::constant(ctx.table, 0);
    auto unit = repring::VirtualCharacter::constant(ctx.table, 1);
    check.substitution_zero =
        poly::eval(pres.relations_v_phi[i], env, zero, &unit) == zero;

    // Route 2: plain integer evaluation, one conjugacy class at a time.
    check.per_class_zero = true;
    for (std::size_t c = 0; c < ctx.table->classes.size(); ++c) {
      std::map<std::string, Int> point = {
          {"v", Int(static_cast<long>(ctx.v.values()[c]))},
          {"phi", Int(static_cast<long>(ctx.phi.values()[c]))},
      };
      Int zero_int(0), one_int(1);
      Int value = poly::eval(pres.relations_v_phi[i], point, zero_int, &one_int);
      if (value != 0) check.per_class_zero = false;
    }
    out.push_back(std::move(check));
  }
  return out;
}

TruncatedKRing TruncatedKRing::build(int half_degree) {
  if (half_degree < 0 || half_degree > 20)
    throw std::invalid_argument("truncation: need 0 <= N <= 20");
  TruncatedKRing t;
  t.n_ = half_degree;

  // Basis monomials v^a x^b with a + 2b <= N, ordered by weight then by
  // x-degree, so pure v powers come first within a weight.
  for (int w = 1; w <= half_degree; ++w)
    for (int b = 0; 2 * b <= w; ++b) {
      int a = w - 2 * b;
      if (a + 2 * b <= half_degree) t.basis_.push_back({a, b});
    }
  std::stable_sort(t.basis_.begin(), t.basis_.end(),
                   [](const auto& lhs, const auto& rhs) {
                     int wl = lhs.first + 2 * lhs.second;
                     int wr = rhs.first + 2 * rhs.second;
                     if (wl != wr) return wl < wr;
                     return lhs.second < rhs.second;
                   });

  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < t.basis_.size(); ++i) index[t.basis_[i]] = i;

  const auto& pres = RingPresentation::standard();
  std::vector<std::vector<Int>> rows;
  for (const Poly& rel : pres.relations_v_x) {
    // Multiply by every monomial of weight <= 2N, including 1; products
    // whose terms all exceed the truncation weight vanish entirely.
    std::vector<std::pair<int, int>> multipliers = {{0, 0}};
    multipliers.insert(multipliers.end(), t.basis_.begin(), t.basis_.end());
    for (const auto& [ma, mb] : multipliers) {
      std::vector<Int> row(t.basis_.size(), Int(0));
      bool nonzero = false;
      for (const auto& [mono, coeff] : rel.terms()) {
        int a = ma, b = mb;
        for (const auto& [var, e] : mono) (var == "v" ? a : b) += e;
        auto it = index.find({a, b});
        if (it == index.end()) continue;  // beyond truncation
        row[it->second] += coeff;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  t.group_ = AbelianGroupPresentation::with_relations(t.basis_.size(), rows);
  return t;
}

std::string TruncatedKRing::label(std::size_t i) const {
  const auto& [a, b] = basis_[i];
  std::ostringstream os;
  if (a > 0) {
    os << 'v';
    if (a > 1) os << '^' << a;
  }
  if (b > 0) {
    if (a > 0) os << '*';
    os << 'x';
    if (b > 1) os << '^' << b;
  }
  return os.str();
}

std::vector<Int> TruncatedKRing::reduce(const Poly& p) const {
  Poly q = to_vx_coordinates(p);
  if (q.constant_term() != 0)
    throw std::domain_error("nonzero constant term: not a reduced class");
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < basis_.size(); ++i) index[basis_[i]] = i;
  std::vector<Int> out(basis_.size(), Int(0));
  for (const auto& [mono, coeff] : q.terms()) {
    int a = 0, b = 0;
    for (const auto& [var, e] : mono) (var == "v" ? a : b) += e;
    if (a == 0 && b == 0) continue;
    auto it = index.find({a, b});
    if (it == index.end()) continue;  // truncated away
    out[it->second] += coeff;
  }
  return out;
}

ElementOrder TruncatedKRing::order_of(const Poly& p) const {
  return intlinalg::element_order(group_, reduce(p));
}

Int element_order_in_skeleton(const Poly& e, int half_degree) {
  if (half_degree < 1)
    throw std::invalid_argument("skeleton: need half-degree >= 1");
  TruncatedKRing t = TruncatedKRing::build(half_degree);
  ElementOrder o = t.order_of(e);
  if (!o.is_finite())
    throw std::logic_error("truncated model is unexpectedly infinite");
  return o.value();
}

Int element_order_in_skeleton(const std::string& e, int half_degree) {
  return element_order_in_skeleton(poly::parse(e), half_degree);
}

std::vector<Int> FiltrationQuotient::orders() const {
  std::vector<Int> out;
  for (const auto& s : summands) out.push_back(s.order);
  return out;
}

std::string FiltrationQuotient::to_string() const {
  if (summands.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) os << " + ";
    os << 'Z' << summands[i].order;
  }
  return os.str();
}

namespace {

// Searches for distinct weight-2j monomials whose images realize the
// invariant factors and jointly generate the quotient.
std::vector<std::string> assign_generator_labels(
    const AbelianGroupPresentation& q, const std::vector<Int>& factors,
    const std::vector<std::pair<std::size_t, std::string>>& candidates) {
  std::vector<Int> cand_order;
  for (const auto& [gen_index, label] : candidates) {
    std::vector<Int> e(q.rank, Int(0));
    e[gen_index] = 1;
    ElementOrder o = intlinalg::element_order(q, e);
    cand_order.push_back(o.is_finite() ? o.value() : Int(0));
  }

  std::vector<std::size_t> chosen(factors.size());
  std::vector<bool> used(candidates.size(), false);

  auto generates = [&]() {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < q.relations.rows(); ++i)
      rows.push_back(q.relations.row(i));
    for (std::size_t c : chosen) {
      std::vector<Int> e(q.rank, Int(0));
      e[candidates[c].first] = 1;
      rows.push_back(std::move(e));
    }
    auto full = AbelianGroupPresentation::with_relations(q.rank, rows);
    return intlinalg::group_structure(full).empty();
  };

  std::function<bool(std::size_t)> search = [&](std::size_t slot) -> bool {
    if (slot == factors.size()) return generates();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c] || cand_order[c] != factors[slot]) continue;
      used[c] = true;
      chosen[slot] = c;
      if (search(slot + 1)) return true;
      used[c] = false;
    }
    return false;
  };

  if (!search(0)) return {};
  std::vector<std::string> labels;
  for (std::size_t c : chosen) labels.push_back(candidates[c].second);
  return labels;
}

}  // namespace

FiltrationQuotient einfinity(int j, int half_degree) {
  if (j < 1 || j > half_degree)
    throw std::invalid_argument("einfinity: need 1 <= j <= N");
  TruncatedKRing t = TruncatedKRing::build(half_degree);

  std::vector<std::vector<Int>> gens, sub_gens;
  std::vector<std::pair<std::size_t, std::string>> candidates;
  std::size_t gen_count = 0;
  for (std::size_t i = 0; i < t.basis_size(); ++i) {
    if (t.weight(i) < 2 * j) continue;
    std::vector<Int> e(t.basis_size(), Int(0));
    e[i] = 1;
    gens.push_back(e);
    if (t.weight(i) == 2 * j) candidates.push_back({gen_count, t.label(i)});
    if (t.weight(i) >= 2 * j + 2) sub_gens.push_back(std::move(e));
    ++gen_count;
  }

  AbelianGroupPresentation q =
      intlinalg::subgroup_quotient(t.group(), gens, sub_gens);
  std::vector<Int> factors = intlinalg::group_structure(q);
  for (const Int& f : factors)
    if (f == 0) throw std::logic_error("einfinity: infinite filtration quotient");

  FiltrationQuotient out;
  out.degree = 2 * j;
  std::vector<std::string> labels = assign_generator_labels(q, factors, candidates);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    FiltrationSummand s;
    s.order = factors[i];
    s.generator = labels.empty() ? std::string() : labels[i];
    out.summands.push_back(std::move(s));
  }
  return out;
}

bool einfinity_stable(int j, int half_degree) {
  return einfinity(j, half_degree).orders() ==
         einfinity(j, half_degree + 1).orders();
}

bool power_identity_check(int j) {
  if (j < 1) throw std::invalid_argument("power_identity_check: need j >= 1");
  const auto& ctx = repring::S4Context::get();
  repring::VirtualCharacter lhs = ctx.v.pow(j);
  Int scale(1);
  for (int i = 1; i < j; ++i) scale *= -2;
  return lhs == ctx.v * scale;
}

}  // namespace kbs4::kring
