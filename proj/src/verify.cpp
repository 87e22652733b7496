#include "kbs4/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "kbs4/cohomology.hpp"
#include "kbs4/intlinalg.hpp"
#include "kbs4/kring.hpp"
#include "kbs4/lens.hpp"
#include "kbs4/repring.hpp"
#include "kbs4/symchars.hpp"

namespace kbs4::verify {

using intlinalg::Int;
using repring::S4Context;
using symchars::Partition;

namespace {

std::string orders_text(const std::vector<Int>& orders) {
  std::ostringstream os;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) os << " + ";
    os << 'Z' << orders[i];
  }
  if (orders.empty()) os << '0';
  return os.str();
}

void add(std::vector<Check>& out, std::string name, std::string claim,
         bool pass, std::string detail) {
  out.push_back({std::move(name), std::move(claim), pass, std::move(detail)});
}

void character_table_checks(std::vector<Check>& out) {
  const auto& ctx = S4Context::get();
  const auto& t = *ctx.table;

  {
    std::vector<long long> dims = t.dimensions();
    std::sort(dims.begin(), dims.end());
    add(out, "chartab/s4-dimensions",
        "S4 has five irreducibles of dimensions 1,1,2,3,3",
        dims == std::vector<long long>{1, 1, 2, 3, 3}, "");
  }
  {
    std::map<std::string, long long> expect = {{"[1,1,1,1]", 1},
                                               {"[2,1,1]", 6},
                                               {"[3,1]", 8},
                                               {"[4]", 6},
                                               {"[2,2]", 3}};
    bool ok = t.classes.size() == expect.size();
    for (std::size_t c = 0; ok && c < t.classes.size(); ++c)
      ok = expect.at(t.classes[c].to_string()) == t.class_sizes[c];
    add(out, "chartab/s4-class-sizes",
        "class sizes are 1, 6, 8, 6, 3 on 1, (12), (123), (1234), (12)(34)", ok,
        "");
  }
  {
    const long long order = std::accumulate(t.class_sizes.begin(),
                                            t.class_sizes.end(), 0LL);
    bool ok = true;
    for (std::size_t i = 0; i < t.irreps.size(); ++i)
      for (std::size_t j = 0; j < t.irreps.size(); ++j) {
        long long dot = 0;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          dot += t.class_sizes[c] * t.values[i][c] * t.values[j][c];
        ok = ok && dot == (i == j ? order : 0);
      }
    add(out, "chartab/s4-orthogonality",
        "row orthogonality of the S4 table holds exactly", ok, "");
  }
  {
    const std::size_t c = t.class_index(Partition{{2, 1, 1}});
    add(out, "chartab/s4-standard-on-transposition",
        "the standard character d3 takes value +1 on the class of (12)",
        ctx.d3.values()[c] == 1, "");
  }
}

void representation_ring_checks(std::vector<Check>& out) {
  const auto& ctx = S4Context::get();
  auto env = ctx.irreducible_env();
  const std::vector<std::pair<std::string, std::string>> relations = {
      {"d1^2", "1"},
      {"d2^2", "1 + d1 + d2"},
      {"d3^2", "1 + d2 + d3 + d1*d3"},
      {"d2*d3", "d3 + d1*d3"},
      {"d1*d2", "d2"},
  };
  for (const auto& [lhs, rhs] : relations)
    add(out, "rring/" + lhs + "=" + rhs, lhs + " = " + rhs + " in R(S4)",
        repring::verify_relation(lhs, rhs, env), "");

  auto reduced = ctx.reduced_env();
  const std::vector<std::pair<std::string, std::string>> reduced_relations = {
      {"2*v", "-v^2"},
      {"3*delta + delta^2", "v"},
      {"4*phi + phi^2", "3*v + delta + v*phi"},
      {"delta*phi", "3*v + v*phi - 3*delta"},
      {"v*delta", "v^2"},
  };
  for (const auto& [lhs, rhs] : reduced_relations)
    add(out, "rring/" + lhs + "=" + rhs,
        lhs + " = " + rhs + " for v = d1-1, delta = d2-2, phi = d3-3",
        repring::verify_relation(lhs, rhs, reduced), "");
}

void restriction_checks(std::vector<Check>& out) {
  const auto& ctx = S4Context::get();
  struct Case {
    int n;
    const repring::VirtualCharacter* rep;
    std::string rep_name;
    std::vector<long long> expect;
  };
  const std::vector<Case> cases = {
      {2, &ctx.d1, "d1", {0, 1}},
      {2, &ctx.d2, "d2", {2, 0}},
      {2, &ctx.d3, "d3", {1, 2}},
      {3, &ctx.d1, "d1", {1, 0, 0}},
      {3, &ctx.d2, "d2", {0, 1, 1}},
      {3, &ctx.d3, "d3", {1, 1, 1}},
      {4, &ctx.d1, "d1", {0, 0, 1, 0}},
      {4, &ctx.d2, "d2", {1, 0, 1, 0}},
      {4, &ctx.d3, "d3", {0, 1, 1, 1}},
  };
  for (const auto& c : cases) {
    repring::CyclicDecomposition dec = repring::restrict_to_cyclic(*c.rep, c.n);
    repring::CyclicDecomposition want{c.n, c.expect};
    add(out, "restrict/Z" + std::to_string(c.n) + "-" + c.rep_name,
        "res(" + c.rep_name + ") to Z" + std::to_string(c.n) + " = " +
            want.to_string(),
        dec == want, "computed " + dec.to_string());
  }
}

void generation_checks(std::vector<Check>& out) {
  const auto& ctx = S4Context::get();
  add(out, "rring/hooks-generate",
      "the hook characters d1 and d3 generate R(S4)",
      repring::generates_ring({ctx.d1, ctx.d3}), "");
  add(out, "rring/d2-not-generating",
      "d2 alone does not generate R(S4): its powers never separate the "
      "classes of (12) and (1234)",
      !repring::generates_ring({ctx.d2}), "");
  add(out, "rring/unit-not-generating", "the unit alone generates rank 1 < 5",
      !repring::generates_ring({ctx.one}), "");
}

void kring_checks(std::vector<Check>& out) {
  const auto checks = kring::verify_presentation();
  bool oracle_ok = true;
  for (const auto& c : checks) {
    add(out, "kring/relation(" + c.name + ")",
        c.name + " = 0 under v = d1 - 1, phi = d3 - 3", c.substitution_zero, "");
    oracle_ok = oracle_ok && c.per_class_zero == c.substitution_zero &&
                c.per_class_zero;
  }
  add(out, "kring/per-class-oracle",
      "per-class integer evaluation agrees with the character route",
      oracle_ok, "");

  {
    bool ok = true;
    for (int j = 1; j <= 10; ++j) ok = ok && kring::power_identity_check(j);
    add(out, "kring/v-powers", "v^j = (-2)^(j-1) v for 1 <= j <= 10", ok, "");
  }
}

void einfinity_checks(std::vector<Check>& out) {
  const std::map<int, std::vector<Int>> expected = {
      {1, {2}},          {2, {2, 12}},       {3, {2, 2}},
      {4, {2, 2, 12}},   {5, {2, 2, 2}},     {6, {2, 2, 2, 12}},
  };
  for (const auto& [j, want] : expected) {
    kring::FiltrationQuotient e = kring::einfinity(j, j + 2);
    add(out, "einf/degree-" + std::to_string(2 * j),
        "E^{" + std::to_string(2 * j) + ",-" + std::to_string(2 * j) +
            "} = " + orders_text(want),
        e.orders() == want, "computed " + e.to_string());
  }
  {
    bool ok = true;
    for (int j = 1; j <= 6; ++j) ok = ok && kring::einfinity_stable(j, j + 2);
    add(out, "einf/stability",
        "each filtration quotient is unchanged one truncation deeper", ok, "");
  }
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      Int graded = 1;
      for (int j = 1; j <= n; ++j)
        for (const Int& d : kring::einfinity(j, n).orders()) graded *= d;
      Int total = intlinalg::order_from_structure(
          intlinalg::group_structure(kring::TruncatedKRing::build(n).group()));
      ok = ok && graded == total;
    }
    add(out, "einf/graded-order",
        "the filtration quotients multiply up to the truncation group order "
        "(N <= 6)",
        ok, "");
  }
  {
    kring::FiltrationQuotient e4 = kring::einfinity(2, 4);
    bool ok = false;
    for (const auto& s : e4.summands)
      ok = ok || (s.generator == "x" && s.order == 12);
    add(out, "kring/order-x-in-E4", "x has order 12 in E^{4,-4}", ok,
        "computed " + e4.to_string());
  }
  {
    Int got = kring::element_order_in_skeleton(std::string("phi"), 2);
    add(out, "kring/order-phi-4-skeleton",
        "phi has order 24 on the 4-skeleton of BS4", got == 24,
        "computed " + got.get_str());
  }
}

void cohomology_checks(std::vector<Check>& out) {
  {
    const auto& expect = cohomology_expected_text();
    bool ok = true;
    std::string first_bad;
    for (int j = 0; j <= 12; ++j) {
      if (cohomology::even_cohomology(j).to_string() != expect[static_cast<std::size_t>(j)]) {
        ok = false;
        if (first_bad.empty()) first_bad = "first mismatch at j=" + std::to_string(j);
      }
    }
    add(out, "cohomology/table",
        "H^{2j}(BS4) matches the twelve-case closed form for j <= 12", ok,
        first_bad);
  }
  {
    bool ok = true;
    for (int j = 0; j <= 30; ++j)
      for (const auto& s : cohomology::even_cohomology(j).summands) {
        const bool has_b4 = s.generator.find("b4") != std::string::npos;
        const bool has_2primary =
            s.generator.find("a2") != std::string::npos ||
            s.generator.find("a3") != std::string::npos ||
            s.generator.find("a4") != std::string::npos;
        ok = ok && !(has_b4 && has_2primary);
        ok = ok && (s.order != 3 || has_b4);
        ok = ok && (s.order != 4 || (s.generator.rfind("a4", 0) == 0 &&
                                     s.generator.find('*') == std::string::npos));
      }
    add(out, "cohomology/primary-separation",
        "2-primary and 3-primary summands never mix; order 4 sits on pure "
        "a4-powers (j <= 30)",
        ok, "");
  }
  for (int j = 1; j <= 6; ++j) {
    cohomology::SurvivalReport r = cohomology::survival_compare(j, j + 2);
    bool dying_ok = true;
    for (const auto& s : r.dying)
      dying_ok = dying_ok && s.generator.find("a3") != std::string::npos;
    add(out, "cohomology/survival-" + std::to_string(2 * j),
        "in degree " + std::to_string(2 * j) +
            " exactly the a3-generated summands die and the rest match "
            "E^{2j,-2j}",
        r.einf_match && dying_ok, "einf " + orders_text(r.einf_orders));
  }
}

void lens_checks(std::vector<Check>& out) {
  {
    auto r32 = lens::LensRing::build(3, 2);
    auto s = intlinalg::group_structure(r32->group());
    add(out, "lens/group-3-2", "K(BZ3^(4)) = Z3 + Z3",
        s == std::vector<Int>{3, 3}, "computed " + orders_text(s));
  }
  {
    auto r42 = lens::LensRing::build(4, 2);
    auto s = intlinalg::group_structure(r42->group());
    add(out, "lens/group-4-2", "K(BZ4^(4)) = Z2 + Z8",
        s == std::vector<Int>{2, 8}, "computed " + orders_text(s));
  }
  {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
      for (int m = 1; m <= 5; ++m) {
        Int expect = 1;
        for (int i = 0; i < m; ++i) expect *= n;
        Int got = intlinalg::order_from_structure(
            intlinalg::group_structure(lens::LensRing::build(n, m)->group()));
        ok = ok && got == expect;
      }
    add(out, "lens/group-orders", "|K(BZn^(2m))| = n^m for n <= 6, m <= 5", ok,
        "");
  }
  {
    lens::LensElement p = lens::pullback_from_s4(std::string("phi"), 3, 2);
    bool raw_ok = p.to_string() == "3*mu + mu^2";
    bool reduced_ok = p.reduced().to_string() == "mu^2";
    add(out, "lens/pullback-phi-BZ3",
        "phi pulls back to 3*mu + mu^2 over BZ3^(4), normal form mu^2",
        raw_ok && reduced_ok,
        "raw " + p.to_string() + ", reduced " + p.reduced().to_string());
  }
  {
    lens::LensElement p = lens::pullback_from_s4(std::string("phi"), 4, 3);
    bool raw_ok = p.to_string() == "6*mu + 4*mu^2 + mu^3";
    bool leading_ok = p.reduced().coeffs()[0] == 2;  // "2*mu + h.o.t."
    add(out, "lens/pullback-phi-BZ4",
        "phi pulls back to 6*mu + 4*mu^2 + mu^3 over BZ4^(6); the normal "
        "form starts with 2*mu",
        raw_ok && leading_ok,
        "raw " + p.to_string() + ", reduced " + p.reduced().to_string());
  }
  {
    lens::LensElement p = lens::pullback_from_s4(std::string("v"), 3, 2);
    add(out, "lens/pullback-v-BZ3",
        "res(d1) is trivial on Z3, so v pulls back to 0",
        p.to_string() == "0", "computed " + p.to_string());
  }
  {
    Int o3 = lens::pullback_order(std::string("phi"), 3, 2);
    Int o4 = lens::pullback_order(std::string("phi"), 4, 2);
    add(out, "lens/pullback-orders",
        "the pullbacks of phi over BZ3^(4) and BZ4^(4) have orders 3 and 4",
        o3 == 3 && o4 == 4,
        "computed " + o3.get_str() + " and " + o4.get_str());
    Int upstairs = kring::element_order_in_skeleton(std::string("phi"), 2);
    add(out, "lens/naturality",
        "lcm of the lens orders divides the order of phi on the 4-skeleton",
        upstairs % intlinalg::lcm(o3, o4) == 0,
        "lcm " + intlinalg::lcm(o3, o4).get_str() + " | " + upstairs.get_str());
  }
}

void snf_checks(std::vector<Check>& out) {
  using intlinalg::IntMatrix;
  auto d_of = [](const std::vector<std::vector<Int>>& rows) {
    return intlinalg::smith_normal_form(IntMatrix::from_rows(rows)).d;
  };
  bool ok = d_of({{3, 3}, {0, 3}}) == std::vector<Int>{3, 3} &&
            d_of({{4, 6}, {0, 4}}) == std::vector<Int>{2, 8} &&
            d_of({{1, 0}, {0, 1}}) == std::vector<Int>{1, 1};
  add(out, "snf/spot-checks",
      "hand-eliminated invariant factors: (3,3), (2,8) and the identity", ok,
      "");
}

}  // namespace

std::vector<Check> run_all_checks() {
  std::vector<Check> out;
  character_table_checks(out);
  representation_ring_checks(out);
  restriction_checks(out);
  generation_checks(out);
  kring_checks(out);
  einfinity_checks(out);
  cohomology_checks(out);
  lens_checks(out);
  snf_checks(out);
  return out;
}

const std::vector<std::string>& cohomology_expected_text() {
  static const std::vector<std::string> table = {
      "Z",
      "Z2(a2)",
      "Z2(a2^2) + Z4(a4) + Z3(b4)",
      "Z2(a2^3) + Z2(a2*a4) + Z2(a3^2)",
      "Z2(a2^4) + Z2(a2^2*a4) + Z4(a4^2) + Z3(b4^2)",
      "Z2(a2^5) + Z2(a2^3*a4) + Z2(a2*a4^2) + Z2(a3^2*a4)",
      "Z2(a2^6) + Z2(a2^4*a4) + Z2(a2^2*a4^2) + Z2(a3^4) + Z4(a4^3) + Z3(b4^3)",
      "Z2(a2^7) + Z2(a2^5*a4) + Z2(a2^3*a4^2) + Z2(a2*a4^3) + Z2(a3^2*a4^2)",
      "Z2(a2^8) + Z2(a2^6*a4) + Z2(a2^4*a4^2) + Z2(a2^2*a4^3) + Z2(a3^4*a4) + "
      "Z4(a4^4) + Z3(b4^4)",
      "Z2(a2^9) + Z2(a2^7*a4) + Z2(a2^5*a4^2) + Z2(a2^3*a4^3) + Z2(a2*a4^4) + "
      "Z2(a3^6) + Z2(a3^2*a4^3)",
      "Z2(a2^10) + Z2(a2^8*a4) + Z2(a2^6*a4^2) + Z2(a2^4*a4^3) + "
      "Z2(a2^2*a4^4) + Z2(a3^4*a4^2) + Z4(a4^5) + Z3(b4^5)",
      "Z2(a2^11) + Z2(a2^9*a4) + Z2(a2^7*a4^2) + Z2(a2^5*a4^3) + "
      "Z2(a2^3*a4^4) + Z2(a2*a4^5) + Z2(a3^6*a4) + Z2(a3^2*a4^4)",
      "Z2(a2^12) + Z2(a2^10*a4) + Z2(a2^8*a4^2) + Z2(a2^6*a4^3) + "
      "Z2(a2^4*a4^4) + Z2(a2^2*a4^5) + Z2(a3^8) + Z2(a3^4*a4^3) + Z4(a4^6) + "
      "Z3(b4^6)",
  };
  return table;
}

}  // namespace kbs4::verify
