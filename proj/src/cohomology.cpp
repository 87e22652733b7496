#include "kbs4/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace kbs4::cohomology {

namespace {

std::string monomial(const char* var, int e) {
  std::string s = var;
  if (e != 1) s += '^' + std::to_string(e);
  return s;
}

std::string monomial2(const char* v1, int e1, const char* v2, int e2) {
  if (e2 == 0) return monomial(v1, e1);
  if (e1 == 0) return monomial(v2, e2);
  return monomial(v1, e1) + '*' + monomial(v2, e2);
}

void z2(std::vector<CohomologySummand>& out, const std::string& gen) {
  out.push_back({2, gen});
}

}  // namespace

EvenCohomology even_cohomology(int j) {
  if (j < 0) throw std::invalid_argument("even_cohomology: need j >= 0");
  EvenCohomology h;
  h.j = j;
  auto& s = h.summands;

  switch (j) {
    case 0:
      h.free_rank = 1;
      return h;
    case 1:
      z2(s, "a2");
      return h;
    case 2:
      z2(s, "a2^2");
      s.push_back({4, "a4"});
      s.push_back({3, "b4"});
      return h;
    case 3:
      z2(s, "a2^3");
      z2(s, "a2*a4");
      z2(s, "a3^2");
      return h;
    case 4:
      z2(s, "a2^4");
      z2(s, "a2^2*a4");
      s.push_back({4, "a4^2"});
      s.push_back({3, "b4^2"});
      return h;
    case 5:
      z2(s, "a2^5");
      z2(s, "a2^3*a4");
      z2(s, "a2*a4^2");
      z2(s, "a3^2*a4");
      return h;
    default:
      break;
  }

  const int k = j / 6;
  switch (j % 6) {
    case 0:
      for (int i = 0; i <= 3 * k - 1; ++i)
        z2(s, monomial2("a2", 6 * k - 2 * i, "a4", i));
      for (int i = 0; i <= k - 1; ++i)
        z2(s, monomial2("a3", 4 * k - 4 * i, "a4", 3 * i));
      s.push_back({4, monomial("a4", 3 * k)});
      s.push_back({3, monomial("b4", 3 * k)});
      break;
    case 1:
      for (int i = 0; i <= 3 * k; ++i)
        z2(s, monomial2("a2", 6 * k + 1 - 2 * i, "a4", i));
      for (int i = 0; i <= k - 1; ++i)
        z2(s, monomial2("a3", 4 * k - 4 * i - 2, "a4", 3 * i + 2));
      break;
    case 2:
      for (int i = 0; i <= 3 * k; ++i)
        z2(s, monomial2("a2", 6 * k + 2 - 2 * i, "a4", i));
      for (int i = 0; i <= k - 1; ++i)
        z2(s, monomial2("a3", 4 * k - 4 * i, "a4", 3 * i + 1));
      s.push_back({4, monomial("a4", 3 * k + 1)});
      s.push_back({3, monomial("b4", 3 * k + 1)});
      break;
    case 3:
      for (int i = 0; i <= 3 * k + 1; ++i)
        z2(s, monomial2("a2", 6 * k + 3 - 2 * i, "a4", i));
      for (int i = 0; i <= k; ++i)
        z2(s, monomial2("a3", 4 * k + 2 - 4 * i, "a4", 3 * i));
      break;
    case 4:
      for (int i = 0; i <= 3 * k + 1; ++i)
        z2(s, monomial2("a2", 6 * k + 4 - 2 * i, "a4", i));
      for (int i = 0; i <= k - 1; ++i)
        z2(s, monomial2("a3", 4 * k - 4 * i, "a4", 3 * i + 2));
      s.push_back({4, monomial("a4", 3 * k + 2)});
      s.push_back({3, monomial("b4", 3 * k + 2)});
      break;
    case 5:
      for (int i = 0; i <= 3 * k + 2; ++i)
        z2(s, monomial2("a2", 6 * k + 5 - 2 * i, "a4", i));
      for (int i = 0; i <= k; ++i)
        z2(s, monomial2("a3", 4 * k + 2 - 4 * i, "a4", 3 * i + 1));
      break;
  }
  return h;
}

std::string EvenCohomology::to_string() const {
  if (free_rank == 1 && summands.empty()) return "Z";
  std::ostringstream os;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) os << " + ";
    os << 'Z' << summands[i].order << '(' << summands[i].generator << ')';
  }
  if (summands.empty()) os << '0';
  return os.str();
}

SurvivalReport survival_compare(int j, int half_degree) {
  if (j < 1) throw std::invalid_argument("survival_compare: need j >= 1");
  EvenCohomology h = even_cohomology(j);
  SurvivalReport report;
  report.degree = 2 * j;
  for (const auto& s : h.summands) {
    if (s.generator.find("a3") != std::string::npos)
      report.dying.push_back(s);
    else
      report.surviving.push_back(s);
  }

  kring::FiltrationQuotient e = kring::einfinity(j, half_degree);
  report.einf_orders = e.orders();

  std::vector<kring::Int> surviving_orders;
  for (const auto& s : report.surviving) surviving_orders.emplace_back(s.order);
  // Compare up to isomorphism: Z4 + Z3 and Z12 are the same type.
  report.einf_match =
      intlinalg::invariant_factors_of_cyclic_sum(surviving_orders) ==
      intlinalg::invariant_factors_of_cyclic_sum(report.einf_orders);
  return report;
}

const std::vector<std::string>& ring_relation_notes() {
  static const std::vector<std::string> notes = {
      "2*a2", "2*a3", "4*a4", "3*b4",
      "a2*a3^(2j) - a2^(j+1)*(a4 + a2^2)^j  for all j >= 1",
  };
  return notes;
}

}  // namespace kbs4::cohomology
