#include "kbs4/lens.hpp"

#include <sstream>
#include <stdexcept>

#include "kbs4/repring.hpp"

namespace kbs4::lens {

using intlinalg::AbelianGroupPresentation;
using intlinalg::IntMatrix;

LensElement::LensElement(std::shared_ptr<const LensRing> ring,
                         std::vector<Int> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(ring_->m()))
    throw std::invalid_argument("lens element: wrong coefficient count");
}

LensElement LensElement::operator+(const LensElement& o) const {
  if (ring_->n() != o.ring_->n() || ring_->m() != o.ring_->m())
    throw std::invalid_argument("lens elements from different rings");
  std::vector<Int> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return LensElement(ring_, std::move(c));
}

LensElement LensElement::operator*(const LensElement& o) const {
  if (ring_->n() != o.ring_->n() || ring_->m() != o.ring_->m())
    throw std::invalid_argument("lens elements from different rings");
  // coeffs_[i] is the coefficient of mu^{i+1}; powers above mu^m truncate
  std::vector<Int> c(coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      std::size_t power = i + j + 2;
      if (power > coeffs_.size()) continue;
      c[power - 1] += coeffs_[i] * o.coeffs_[j];
    }
  return LensElement(ring_, std::move(c));
}

LensElement LensElement::operator*(const Int& k) const {
  std::vector<Int> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * k;
  return LensElement(ring_, std::move(c));
}

LensElement LensElement::reduced() const {
  return LensElement(
      ring_, intlinalg::reduce_mod_lattice(coeffs_, ring_->relation_hermite_form()));
}

intlinalg::ElementOrder LensElement::order() const {
  return intlinalg::element_order(ring_->group(), coeffs_);
}

std::string LensElement::to_string() const {
  poly::Poly p;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    p.add_term({{"mu", static_cast<int>(i + 1)}}, coeffs_[i]);
  return p.to_string();
}

LensRing::LensRing(int n, int m) : n_(n), m_(m) {}

std::shared_ptr<const LensRing> LensRing::build(int n, int m) {
  if (n < 2 || n > 12 || m < 1 || m > 12)
    throw std::invalid_argument("lens ring: need 2 <= n <= 12, 1 <= m <= 12");
  auto ring = std::shared_ptr<LensRing>(new LensRing(n, m));

  // Relations mu^k ((1+mu)^n - 1) for k >= 0, truncated at mu^m.
  std::vector<std::vector<Int>> rows;
  for (int k = 0; k < m; ++k) {
    std::vector<Int> row(static_cast<std::size_t>(m), Int(0));
    for (int i = 1; i <= n && k + i <= m; ++i) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(i));
      row[static_cast<std::size_t>(k + i - 1)] = binom;
    }
    rows.push_back(std::move(row));
  }
  ring->group_ = AbelianGroupPresentation::with_relations(
      static_cast<std::size_t>(m), rows);
  ring->hnf_ = intlinalg::hermite_form(ring->group_.relations);
  return ring;
}

LensElement LensRing::zero() const {
  return LensElement(shared_from_this(),
                     std::vector<Int>(static_cast<std::size_t>(m_), Int(0)));
}

LensElement LensRing::element(std::vector<Int> coeffs) const {
  return LensElement(shared_from_this(), std::move(coeffs));
}

LensElement LensRing::line_bundle_power(long long k) const {
  // (1+mu)^k - 1 with k >= 0, truncated
  if (k < 0) throw std::invalid_argument("line bundle power: need k >= 0");
  std::vector<Int> c(static_cast<std::size_t>(m_), Int(0));
  for (int i = 1; i <= m_ && i <= k; ++i) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(i));
    c[static_cast<std::size_t>(i - 1)] = binom;
  }
  return LensElement(shared_from_this(), std::move(c));
}

namespace {

// Image of a reduced S4 class under restriction: sum of multiplicities of
// eta^k applied to (1+mu)^k, minus the dimension.
LensElement restrict_reduced(const repring::VirtualCharacter& rep,
                             std::shared_ptr<const LensRing> ring) {
  repring::CyclicDecomposition dec =
      repring::restrict_to_cyclic(rep, ring->n());
  LensElement acc = ring->zero();
  for (int k = 0; k < dec.n; ++k) {
    long long mult = dec.multiplicities[static_cast<std::size_t>(k)];
    if (mult == 0) continue;
    acc = acc + ring->line_bundle_power(k) * Int(static_cast<long>(mult));
  }
  // (1+mu)^k - 1 already drops the constant, and the multiplicities sum to
  // the dimension, so acc is exactly res(rep) - dim(rep).
  return acc;
}

}  // namespace

LensElement pullback_from_s4(const poly::Poly& e, int n, int m) {
  if (n != 2 && n != 3 && n != 4)
    throw std::invalid_argument("pullback: cyclic subgroup must be Z2, Z3 or Z4");
  if (e.constant_term() != 0)
    throw std::domain_error("nonzero constant term: not a reduced class");
  auto ring = LensRing::build(n, m);
  const auto& ctx = repring::S4Context::get();

  LensElement v = restrict_reduced(ctx.d1, ring);
  LensElement delta = restrict_reduced(ctx.d2, ring);
  LensElement phi = restrict_reduced(ctx.d3, ring);
  std::map<std::string, LensElement> env = {
      {"v", v},
      {"delta", delta},
      {"phi", phi},
      {"x", phi + v},
  };
  return poly::eval(e, env, ring->zero(), nullptr);
}

LensElement pullback_from_s4(const std::string& e, int n, int m) {
  return pullback_from_s4(poly::parse(e), n, m);
}

Int pullback_order(const poly::Poly& e, int n, int m) {
  intlinalg::ElementOrder o = pullback_from_s4(e, n, m).order();
  if (!o.is_finite()) throw std::logic_error("lens group is unexpectedly infinite");
  return o.value();
}

Int pullback_order(const std::string& e, int n, int m) {
  return pullback_order(poly::parse(e), n, m);
}

}  // namespace kbs4::lens
