// Multivariate integer polynomials in named generators, with a small
// expression parser for the CLI grammar: integer coefficients, identifiers,
// +, -, *, ^ and parentheses.

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <type_traits>
#include <stdexcept>
#include <string>

namespace kbs4::poly {

using Int = mpz_class;
using Monomial = std::map<std::string, int>;  // variable -> exponent > 0

class Poly {
 public:
  Poly() = default;

  static Poly constant(Int c);
  static Poly variable(const std::string& name);

  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int constant_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly pow(int e) const;  // e >= 0
  bool operator==(const Poly&) const = default;

  /// Replaces each mapped variable by the given polynomial; unmapped
  /// variables pass through unchanged.
  Poly substitute(const std::map<std::string, Poly>& map) const;

  /// Deterministic rendering, e.g. "3*mu + mu^2" or "0".
  std::string to_string() const;

  void add_term(const Monomial& m, const Int& c);

 private:
  std::map<Monomial, Int> terms_;
};

/// Parses the CLI expression grammar. Adjacency is multiplication
/// ("2v" == "2*v"); '^' takes a nonnegative integer exponent.
Poly parse(const std::string& text);

/// Evaluates p with one ring element per variable. Ring must provide
/// operator+, operator*(Ring) and operator*(Int). `unit` is the ring unit,
/// or nullptr for rings without one (then a nonzero constant term throws).
template <class Ring>
Ring eval(const Poly& p, const std::map<std::string, Ring>& env,
          const Ring& zero, const std::type_identity_t<Ring>* unit) {
  Ring acc = zero;
  for (const auto& [mono, coeff] : p.terms()) {
    std::optional<Ring> term;
    if (mono.empty()) {
      if (unit == nullptr)
        throw std::domain_error("constant term has no meaning in this ring");
      term = *unit;
    } else {
      for (const auto& [var, exp] : mono) {
        auto it = env.find(var);
        if (it == env.end())
          throw std::invalid_argument("unbound generator: " + var);
        Ring power = it->second;
        for (int k = 1; k < exp; ++k) power = power * it->second;
        term = term ? *term * power : power;
      }
    }
    acc = acc + *term * coeff;
  }
  return acc;
}

}  // namespace kbs4::poly
