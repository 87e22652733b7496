#include "kbs4/poly.hpp"

#include <cctype>
#include <sstream>

namespace kbs4::poly {

void Poly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::constant(Int c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.add_term({{name, 1}}, 1);
  return p;
}

Int Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Int(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [var, e] : mb) m[var] += e;
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Poly out = Poly::constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

Poly Poly::substitute(const std::map<std::string, Poly>& map) const {
  Poly out;
  for (const auto& [mono, coeff] : terms_) {
    Poly term = Poly::constant(coeff);
    for (const auto& [var, e] : mono) {
      auto it = map.find(var);
      Poly base = it == map.end() ? Poly::variable(var) : it->second;
      term = term * base.pow(e);
    }
    out = out + term;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Int c = coeff;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string vars;
    for (const auto& [var, e] : mono) {
      if (!vars.empty()) vars += '*';
      vars += var;
      if (e != 1) vars += '^' + std::to_string(e);
    }
    if (vars.empty()) {
      os << c;
    } else if (c == 1) {
      os << vars;
    } else {
      os << c << '*' << vars;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected number");
    return Int(s.substr(start, pos - start));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Poly e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return Poly::variable(ident());
    fail("expected number, identifier or '('");
  }

  Poly factor() {
    if (peek() == '-') {
      ++pos;
      return -factor();
    }
    Poly base = atom();
    if (peek() == '^') {
      ++pos;
      Int e = number();
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  Poly term() {
    Poly out = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        out = out * factor();
      } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
                 std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out = out * factor();  // adjacency multiplies
      } else {
        return out;
      }
    }
  }

  Poly expr() {
    Poly out = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        out = out + term();
      } else if (c == '-') {
        ++pos;
        out = out - term();
      } else {
        return out;
      }
    }
  }
};

}  // namespace

Poly parse(const std::string& text) {
  Parser p{text};
  Poly out = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace kbs4::poly
