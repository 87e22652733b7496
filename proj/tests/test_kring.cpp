#include "kbs4/kring.hpp"

#include <map>

#include "doctest.h"
#include "kbs4/repring.hpp"

using namespace kbs4::kring;
using kbs4::intlinalg::AbelianGroupPresentation;
using kbs4::intlinalg::group_structure;
using kbs4::intlinalg::order_from_structure;
using kbs4::poly::parse;

namespace {

std::vector<Int> vec(const std::vector<long long>& v) {
  std::vector<Int> out;
  for (long long c : v) out.emplace_back(static_cast<long>(c));
  return out;
}

}  // namespace

TEST_CASE("presentation relations vanish along both routes") {
  auto checks = verify_presentation();
  REQUIRE(checks.size() == 4);
  for (const auto& c : checks) {
    CHECK(c.substitution_zero);
    CHECK(c.per_class_zero);
  }
}

TEST_CASE("frozen per-class spot values of the relations") {
  // spot evaluations at single classes, done by hand:
  // on the class of 3-cycles phi = -3, v = 0:
  //   12(-3) + 7*9 + (-27) = -36 + 63 - 27 = 0
  // on the class of (12)(34) phi = -4:
  //   24(-4) + 26*16 + 9*(-64) + 256 = -96 + 416 - 576 + 256 = 0
  const auto& ctx = kbs4::repring::S4Context::get();
  const auto r2 = parse("12*phi + 7*phi^2 + phi^3 - 4*v - v*phi");
  const auto r3 = parse("24*phi + 26*phi^2 + 9*phi^3 + phi^4");
  Int zero(0), one(1);

  std::map<std::string, Int> threecycle = {{"v", Int(0)}, {"phi", Int(-3)}};
  CHECK(kbs4::poly::eval(r2, threecycle, zero, &one) == 0);

  std::map<std::string, Int> double_transposition = {{"v", Int(0)}, {"phi", Int(-4)}};
  CHECK(kbs4::poly::eval(r3, double_transposition, zero, &one) == 0);

  // full consistency with the character values
  (void)ctx;
}

TEST_CASE("relations must vanish before a truncation is built") {
  // the stored relations are exactly the ones that vanish; perturbing a
  // coefficient breaks the character substitution
  const auto& ctx = kbs4::repring::S4Context::get();
  auto env = ctx.reduced_env();
  auto zero = kbs4::repring::VirtualCharacter::constant(ctx.table, 0);
  auto unit = kbs4::repring::VirtualCharacter::constant(ctx.table, 1);
  auto bad = parse("12*phi + 7*phi^2 + phi^3 - 4*v - 2*v*phi");
  CHECK_FALSE(kbs4::poly::eval(bad, env, zero, &unit) == zero);
}

TEST_CASE("truncation of the 2-skeleton is Z2 generated by v") {
  TruncatedKRing t = TruncatedKRing::build(1);
  REQUIRE(t.basis_size() == 1);
  CHECK(t.label(0) == "v");
  CHECK(group_structure(t.group()) == vec({2}));
}

TEST_CASE("truncation of the 4-skeleton has order 48") {
  TruncatedKRing t = TruncatedKRing::build(2);
  REQUIRE(t.basis_size() == 3);  // v, v^2, x
  auto s = group_structure(t.group());
  CHECK(order_from_structure(s) == 48);  // 2 * (2 * 12)
  CHECK(s == vec({4, 12}));
}

TEST_CASE("empty truncation") {
  TruncatedKRing t = TruncatedKRing::build(0);
  CHECK(t.basis_size() == 0);
  CHECK(group_structure(t.group()).empty());
}

TEST_CASE("basis reduction is consistent for phi and x - v") {
  TruncatedKRing t = TruncatedKRing::build(3);
  CHECK(t.reduce(parse("phi")) == t.reduce(parse("x - v")));
  CHECK(t.reduce(parse("delta")) ==
        t.reduce(parse("phi^2 + 4*phi - v*phi - 3*v")));
  CHECK_THROWS_AS(t.reduce(parse("v + 1")), std::domain_error);
  CHECK_THROWS_AS(t.reduce(parse("q^2")), std::invalid_argument);
}

TEST_CASE("element orders in shallow truncations") {
  CHECK(element_order_in_skeleton("v", 1) == 2);
  // v^2 = -2v and v^3 truncates to zero, so 4v = -2v^2 = 0 at N = 2
  CHECK(element_order_in_skeleton("v", 2) == 4);
  CHECK(element_order_in_skeleton("x", 2) == 12);
  // x - v in Z4(v) + Z12(x) has order lcm(4,12); the value 24 appears one
  // truncation deeper, where the group is Z8(v) + Z24(x)
  CHECK(element_order_in_skeleton("phi", 2) == 12);
  CHECK(element_order_in_skeleton("phi", 3) == 24);
  CHECK(element_order_in_skeleton("2*v + v^2", 4) == 1);  // a relation
  CHECK_THROWS_AS(element_order_in_skeleton("v + 3", 2), std::domain_error);
}

TEST_CASE("filtration quotients: the stable computed table") {
  // From degree 8 on, the relations force the filtration quotients below
  // the full a3-free cohomology: v^2*x = v^2*phi + v^3 ties the would-be
  // independent order-2 classes together, so the diagonal alternates
  // Z2+Z12 / Z2+Z2. Degrees 2..6 agree with the cohomology survivors.
  const std::map<int, std::vector<long long>> computed = {
      {1, {2}},     {2, {2, 12}}, {3, {2, 2}},
      {4, {2, 12}}, {5, {2, 2}},  {6, {2, 12}},
  };
  for (const auto& [j, want] : computed) {
    FiltrationQuotient e = einfinity(j, j + 2);
    CHECK(e.degree == 2 * j);
    CHECK(e.orders() == vec(want));
  }
  CHECK(einfinity(2, 4).to_string() == "Z2 + Z12");
}

TEST_CASE("truncation group structures") {
  // frozen from the SNF; T4 cross-checked by hand elimination and by the
  // brute-force cokernel enumeration in the acceptance suite
  CHECK(group_structure(TruncatedKRing::build(3).group()) == vec({8, 24}));
  CHECK(group_structure(TruncatedKRing::build(4).group()) == vec({2, 16, 144}));
  CHECK(group_structure(TruncatedKRing::build(5).group()) == vec({2, 32, 288}));
}

TEST_CASE("filtration quotient generator labels") {
  FiltrationQuotient e2 = einfinity(2, 4);
  REQUIRE(e2.summands.size() == 2);
  CHECK(e2.summands[0].generator == "v^2");
  CHECK(e2.summands[0].order == 2);
  CHECK(e2.summands[1].generator == "x");
  CHECK(e2.summands[1].order == 12);

  FiltrationQuotient e3 = einfinity(3, 5);
  REQUIRE(e3.summands.size() == 2);
  CHECK(e3.summands[0].generator == "v^3");
  CHECK(e3.summands[1].generator == "v*x");

  FiltrationQuotient e1 = einfinity(1, 3);
  REQUIRE(e1.summands.size() == 1);
  CHECK(e1.summands[0].generator == "v");
}

TEST_CASE("filtration quotients are stable under deeper truncation") {
  for (int n = 3; n <= 6; ++n)
    for (int j = 1; j <= n - 2; ++j) {
      CHECK(einfinity(j, n).orders() == einfinity(j, n + 1).orders());
    }
}

TEST_CASE("graded orders multiply up to the truncation order") {
  for (int n = 1; n <= 6; ++n) {
    Int graded = 1;
    for (int j = 1; j <= n; ++j)
      for (const Int& d : einfinity(j, n).orders()) graded *= d;
    Int total = order_from_structure(group_structure(TruncatedKRing::build(n).group()));
    REQUIRE(total != 0);
    CHECK(graded == total);
  }
}

TEST_CASE("einfinity argument validation") {
  CHECK_THROWS_AS(einfinity(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(einfinity(0, 2), std::invalid_argument);
  // j = N is allowed: the deeper filtration step is empty there
  CHECK(einfinity(3, 3).orders() == vec({2, 2}));
}

TEST_CASE("truncated models are finite groups") {
  for (int n = 0; n <= 6; ++n)
    for (const Int& d : group_structure(TruncatedKRing::build(n).group()))
      CHECK(d != 0);
}

TEST_CASE("degree-8 filtration labels") {
  FiltrationQuotient e4 = einfinity(4, 6);
  REQUIRE(e4.summands.size() == 2);
  // the order-12 part is generated by x^2; the order-2 part by a weight-8
  // v-monomial (v^4 and v^2*x give the same class there)
  CHECK(e4.summands[1].generator == "x^2");
  CHECK(e4.summands[1].order == 12);
  CHECK((e4.summands[0].generator == "v^4" ||
         e4.summands[0].generator == "v^2*x"));
}

TEST_CASE("powers of v collapse to multiples of v") {
  for (int j = 1; j <= 10; ++j) CHECK(power_identity_check(j));
  // spot value: v^5 = 16 v as characters
  const auto& ctx = kbs4::repring::S4Context::get();
  CHECK(ctx.v.pow(5) == ctx.v * Int(16));
}

TEST_CASE("subgroup quotient route to the degree-4 filtration") {
  // same computation as einfinity(2, .), phrased directly as a quotient
  TruncatedKRing t = TruncatedKRing::build(4);
  std::vector<std::vector<Int>> gens, subs;
  for (std::size_t i = 0; i < t.basis_size(); ++i) {
    if (t.weight(i) < 4) continue;
    std::vector<Int> e(t.basis_size(), Int(0));
    e[i] = 1;
    gens.push_back(e);
    if (t.weight(i) >= 6) subs.push_back(e);
  }
  auto q = kbs4::intlinalg::subgroup_quotient(t.group(), gens, subs);
  CHECK(group_structure(q) == vec({2, 12}));
}
