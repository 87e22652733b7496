#include "kbs4/lens.hpp"

#include <random>

#include "doctest.h"
#include "kbs4/kring.hpp"

using namespace kbs4::lens;
using kbs4::intlinalg::group_structure;
using kbs4::intlinalg::order_from_structure;
using kbs4::poly::parse;
using kbs4::poly::Poly;

namespace {

std::vector<Int> vec(const std::vector<long long>& v) {
  std::vector<Int> out;
  for (long long c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

}  // namespace

TEST_CASE("lens ring group structures") {
  // (1+mu)^3 - 1 = 3mu + 3mu^2 mod mu^3, shifted: 3mu^2
  CHECK(group_structure(LensRing::build(3, 2)->group()) == vec({3, 3}));
  // (1+mu)^4 - 1 = 4mu + 6mu^2 mod mu^3, shifted: 4mu^2
  CHECK(group_structure(LensRing::build(4, 2)->group()) == vec({2, 8}));
  // mu^2 = 0 and 2mu = -mu^2 = 0
  CHECK(group_structure(LensRing::build(2, 1)->group()) == vec({2}));
}

TEST_CASE("lens ring order is n^m") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 5; ++m) {
      Int expect = 1;
      for (int i = 0; i < m; ++i) expect *= n;
      CHECK(order_from_structure(group_structure(LensRing::build(n, m)->group())) ==
            expect);
    }
  CHECK_THROWS_AS(LensRing::build(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(LensRing::build(3, 0), std::invalid_argument);
}

TEST_CASE("pullbacks of the generators") {
  // res(d3) to Z3 is 1 + eta + eta^2, so phi pulls back to 3mu + mu^2
  LensElement p32 = pullback_from_s4("phi", 3, 2);
  CHECK(p32.to_string() == "3*mu + mu^2");
  CHECK(p32.reduced().to_string() == "mu^2");

  // res(d3) to Z4 is eta + eta^2 + eta^3: raw 6mu + 4mu^2 + mu^3, and the
  // normal form modulo (1+mu)^4 = 1 starts with 2mu
  LensElement p43 = pullback_from_s4("phi", 4, 3);
  CHECK(p43.to_string() == "6*mu + 4*mu^2 + mu^3");
  CHECK(p43.reduced().coeffs()[0] == 2);

  // res(d1) to Z3 is trivial, so v dies
  CHECK(pullback_from_s4("v", 3, 2).to_string() == "0");

  // v over Z2: res(d1) = eta, so v pulls back to mu
  CHECK(pullback_from_s4("v", 2, 3).to_string() == "mu");

  CHECK_THROWS_AS(pullback_from_s4("v + 1", 3, 2), std::domain_error);
  CHECK_THROWS_AS(pullback_from_s4("v", 5, 2), std::invalid_argument);
}

TEST_CASE("pullback orders") {
  CHECK(pullback_order("phi", 3, 2) == 3);
  CHECK(pullback_order("phi", 4, 2) == 4);
  CHECK(pullback_order("v", 3, 2) == 1);  // the zero pullback
  CHECK(pullback_order("x", 4, 2) == 4);
}

TEST_CASE("naturality: pullback order divides the order upstairs") {
  const std::vector<std::string> classes = {"v", "phi", "x", "v^2", "v*phi",
                                            "phi^2", "x - 2*v"};
  for (int n : {2, 3, 4}) {
    for (const auto& e : classes) {
      Int down = pullback_order(e, n, 2);
      Int up = kbs4::kring::element_order_in_skeleton(e, 2);
      CHECK(up % down == 0);
    }
  }
  // the combined lens lower bound for phi: lcm(3, 4) divides the upstairs order
  Int up = kbs4::kring::element_order_in_skeleton("phi", 2);
  CHECK(up % kbs4::intlinalg::lcm(pullback_order("phi", 3, 2),
                                  pullback_order("phi", 4, 2)) == 0);
}

TEST_CASE("pullback is a ring map") {
  std::mt19937 rng(13579);
  std::uniform_int_distribution<int> coeff(-2, 2), exp(0, 2);
  auto random_poly = [&] {
    Poly p;
    for (int t = 0; t < 3; ++t) {
      Poly term = kbs4::poly::Poly::constant(coeff(rng));
      term = term * kbs4::poly::Poly::variable("v").pow(exp(rng));
      term = term * kbs4::poly::Poly::variable("phi").pow(exp(rng));
      p = p + term;
    }
    return p - kbs4::poly::Poly::constant(p.constant_term());
  };

  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 30; ++trial) {
      Poly a = random_poly(), b = random_poly();
      LensElement pa = pullback_from_s4(a, n, 3);
      LensElement pb = pullback_from_s4(b, n, 3);
      LensElement pab = pullback_from_s4(a * b, n, 3);
      CHECK(pab.reduced().coeffs() == (pa * pb).reduced().coeffs());
    }
  }
}

TEST_CASE("lens element arithmetic stays inside the truncation") {
  auto ring = LensRing::build(4, 2);
  LensElement mu = ring->element(vec({1, 0}));
  LensElement musq = mu * mu;
  CHECK(musq.coeffs() == vec({0, 1}));
  CHECK((musq * mu).coeffs() == vec({0, 0}));  // mu^3 truncates
  CHECK((mu * Int(3) + musq).to_string() == "3*mu + mu^2");
}
