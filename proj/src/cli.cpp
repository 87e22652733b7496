#include "kbs4/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "kbs4/cohomology.hpp"
#include "kbs4/intlinalg.hpp"
#include "kbs4/kring.hpp"
#include "kbs4/lens.hpp"
#include "kbs4/repring.hpp"
#include "kbs4/symchars.hpp"
#include "kbs4/verify.hpp"

namespace kbs4::cli {

using intlinalg::Int;
using json = nlohmann::ordered_json;

namespace {

json json_header() {
  json j;
  j["schema"] = 1;
  return j;
}

long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw std::domain_error("value too large for JSON output");
  return v.get_si();
}

// Default truncation degree: KRING_TRUNCATION wins, else 2 * (j + 2).
int truncation_degree(int j, int explicit_degree) {
  int degree = explicit_degree;
  if (degree == 0) {
    if (const char* env = std::getenv("KRING_TRUNCATION")) {
      try {
        degree = std::stoi(env);
      } catch (const std::exception&) {
        throw std::invalid_argument("KRING_TRUNCATION is not an integer");
      }
    }
  }
  if (degree == 0) degree = 2 * (j + 2);
  if (degree < 2 || degree > 40 || degree % 2 != 0)
    throw std::invalid_argument("truncation degree must be even and in [2, 40]");
  if (degree / 2 < j)
    throw std::invalid_argument("truncation degree is below the requested degree");
  return degree;
}

int cmd_chartab(int n, bool as_json, std::ostream& out) {
  auto t = symchars::character_table(n);
  if (as_json) {
    json j = json_header();
    j["n"] = n;
    j["classes"] = json::array();
    for (const auto& c : t->classes) j["classes"].push_back(c.to_string());
    j["class_sizes"] = t->class_sizes;
    j["irreps"] = json::array();
    for (const auto& p : t->irreps) j["irreps"].push_back(p.to_string());
    j["hooks"] = t->hook;
    j["values"] = t->values;
    out << j.dump(2) << '\n';
    return 0;
  }

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head = {"class"};
  for (const auto& c : t->classes) head.push_back(c.to_string());
  cells.push_back(head);
  std::vector<std::string> sizes = {"size"};
  for (long long s : t->class_sizes) sizes.push_back(std::to_string(s));
  cells.push_back(sizes);
  for (std::size_t i = 0; i < t->irreps.size(); ++i) {
    std::vector<std::string> row = {t->irreps[i].to_string() +
                                    (t->hook[i] ? "*" : "")};
    for (long long v : t->values[i]) row.push_back(std::to_string(v));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
  out << "# * marks hook shapes\n";
  return 0;
}

int cmd_restrict(const std::string& to, const std::string& rep, bool as_json,
                 std::ostream& out) {
  const auto& ctx = repring::S4Context::get();
  if (to.size() != 2 || (to[0] != 'C' && to[0] != 'Z') || to[1] < '2' || to[1] > '4')
    throw std::invalid_argument("--to must be one of C2, C3, C4");
  const int n = to[1] - '0';
  const repring::VirtualCharacter* x = nullptr;
  if (rep == "d1") x = &ctx.d1;
  else if (rep == "d2") x = &ctx.d2;
  else if (rep == "d3") x = &ctx.d3;
  else throw std::invalid_argument("--rep must be one of d1, d2, d3");

  repring::CyclicDecomposition dec = repring::restrict_to_cyclic(*x, n);
  if (as_json) {
    json j = json_header();
    j["group"] = "S4";
    j["subgroup"] = "C" + std::to_string(n);
    j["rep"] = rep;
    j["multiplicities"] = dec.multiplicities;
    j["pretty"] = dec.to_string();
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "res(" << rep << ") | C" << n << " = " << dec.to_string() << '\n';
  out << "multiplicities:";
  for (long long m : dec.multiplicities) out << ' ' << m;
  out << '\n';
  return 0;
}

struct NamedRelation {
  std::string lhs, rhs;
};

int report_relations(const std::vector<std::pair<std::string, bool>>& results,
                     bool as_json, std::ostream& out, const char* all_pass_note) {
  int failed = 0;
  if (as_json) {
    json j = json_header();
    j["checks"] = json::array();
    for (const auto& [name, ok] : results) {
      j["checks"].push_back({{"name", name}, {"status", ok ? "pass" : "fail"}});
      if (!ok) ++failed;
    }
    j["summary"] = {{"total", results.size()},
                    {"passed", results.size() - failed},
                    {"failed", failed}};
    out << j.dump(2) << '\n';
    return failed == 0 ? 0 : 1;
  }
  for (const auto& [name, ok] : results) {
    out << (ok ? "PASS" : "FAIL") << "  " << name << '\n';
    if (!ok) ++failed;
  }
  if (failed == 0)
    out << all_pass_note << '\n';
  else
    out << failed << " relation(s) failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_verify_rring(bool as_json, std::ostream& out) {
  const auto& ctx = repring::S4Context::get();
  auto irr = ctx.irreducible_env();
  auto red = ctx.reduced_env();
  const std::vector<NamedRelation> first = {
      {"d1^2", "1"},
      {"d2^2", "1 + d1 + d2"},
      {"d3^2", "1 + d2 + d3 + d1*d3"},
      {"d2*d3", "d3 + d1*d3"},
      {"d1*d2", "d2"},
  };
  const std::vector<NamedRelation> second = {
      {"2*v", "-v^2"},
      {"3*delta + delta^2", "v"},
      {"4*phi + phi^2", "3*v + delta + v*phi"},
      {"delta*phi", "3*v + v*phi - 3*delta"},
      {"v*delta", "v^2"},
  };
  std::vector<std::pair<std::string, bool>> results;
  for (const auto& r : first)
    results.push_back({r.lhs + " = " + r.rhs,
                       repring::verify_relation(r.lhs, r.rhs, irr)});
  for (const auto& r : second)
    results.push_back({r.lhs + " = " + r.rhs,
                       repring::verify_relation(r.lhs, r.rhs, red)});
  return report_relations(results, as_json, out, "all relations hold");
}

int cmd_verify_kring(bool as_json, std::ostream& out) {
  std::vector<std::pair<std::string, bool>> results;
  bool oracle = true;
  for (const auto& c : kring::verify_presentation()) {
    results.push_back({c.name + " = 0", c.substitution_zero});
    oracle = oracle && c.per_class_zero && c.per_class_zero == c.substitution_zero;
  }
  results.push_back({"per-class integer evaluation agrees", oracle});
  return report_relations(results, as_json, out, "all presentation relations hold");
}

int cmd_order(const std::string& element, int skeleton, std::ostream& out) {
  if (skeleton < 2 || skeleton % 2 != 0)
    throw std::invalid_argument("--skeleton must be a positive even dimension");
  Int order = kring::element_order_in_skeleton(element, skeleton / 2);
  out << order << '\n';
  return 0;
}

int cmd_einf(int degree, int truncation, bool as_json, std::ostream& out) {
  if (degree < 2 || degree % 2 != 0)
    throw std::invalid_argument("--degree must be a positive even integer");
  const int j = degree / 2;
  const int n = truncation_degree(j, truncation) / 2;
  kring::FiltrationQuotient e = kring::einfinity(j, n);
  if (as_json) {
    json jo = json_header();
    jo["degree"] = degree;
    jo["truncation"] = 2 * n;
    jo["summands"] = json::array();
    for (const auto& s : e.summands)
      jo["summands"].push_back(
          {{"order", to_ll(s.order)}, {"generator", s.generator}});
    out << jo.dump(2) << '\n';
    return 0;
  }
  out << e.to_string() << '\n';
  return 0;
}

int cmd_lens(int n, int skeleton, const std::string& pullback, bool raw_only,
             bool reduced_only, bool as_json, std::ostream& out) {
  if (skeleton < 2 || skeleton % 2 != 0)
    throw std::invalid_argument("--skeleton must be a positive even dimension");
  if ((raw_only || reduced_only) && pullback.empty())
    throw std::invalid_argument("--raw/--reduced need --pullback");
  const int m = skeleton / 2;
  auto ring = lens::LensRing::build(n, m);
  auto structure = intlinalg::group_structure(ring->group());

  auto orders_text = [](const std::vector<Int>& orders) {
    std::ostringstream os;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i) os << " + ";
      os << 'Z' << orders[i];
    }
    if (orders.empty()) os << '0';
    return os.str();
  };

  if (as_json) {
    json j = json_header();
    j["n"] = n;
    j["skeleton"] = skeleton;
    j["group"] = json::array();
    for (const Int& d : structure) j["group"].push_back(to_ll(d));
    if (!pullback.empty()) {
      lens::LensElement p = lens::pullback_from_s4(pullback, n, m);
      j["pullback"] = {{"element", pullback},
                       {"raw", p.to_string()},
                       {"reduced", p.reduced().to_string()},
                       {"order", to_ll(p.order().value())}};
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  if (pullback.empty()) {
    out << "group: " << orders_text(structure) << '\n';
    return 0;
  }
  lens::LensElement p = lens::pullback_from_s4(pullback, n, m);
  if (raw_only) {
    out << p.to_string() << '\n';
    return 0;
  }
  if (reduced_only) {
    out << p.reduced().to_string() << '\n';
    return 0;
  }
  out << "group: " << orders_text(structure) << '\n';
  out << "raw: " << p.to_string() << '\n';
  out << "reduced: " << p.reduced().to_string() << '\n';
  out << "order: " << p.order().to_string() << '\n';
  return 0;
}

int cmd_cohomology(int degree, bool as_json, std::ostream& out) {
  if (degree < 0 || degree % 2 != 0)
    throw std::invalid_argument("--degree must be a nonnegative even integer");
  cohomology::EvenCohomology h = cohomology::even_cohomology(degree / 2);
  if (as_json) {
    json j = json_header();
    j["degree"] = degree;
    j["free_rank"] = h.free_rank;
    j["summands"] = json::array();
    for (const auto& s : h.summands)
      j["summands"].push_back({{"order", s.order}, {"generator", s.generator}});
    out << j.dump(2) << '\n';
    return 0;
  }
  out << h.to_string() << '\n';
  return 0;
}

int cmd_survive(int degree, int truncation, bool as_json, std::ostream& out) {
  if (degree < 2 || degree % 2 != 0)
    throw std::invalid_argument("--degree must be a positive even integer");
  const int j = degree / 2;
  const int n = truncation_degree(j, truncation) / 2;
  cohomology::SurvivalReport r = cohomology::survival_compare(j, n);

  auto summands_text = [](const std::vector<cohomology::CohomologySummand>& list) {
    std::ostringstream os;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) os << " + ";
      os << 'Z' << list[i].order << '(' << list[i].generator << ')';
    }
    if (list.empty()) os << "none";
    return os.str();
  };
  auto orders_text = [](const std::vector<Int>& orders) {
    std::ostringstream os;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i) os << " + ";
      os << 'Z' << orders[i];
    }
    if (orders.empty()) os << '0';
    return os.str();
  };

  if (as_json) {
    json jo = json_header();
    jo["degree"] = degree;
    jo["surviving"] = json::array();
    for (const auto& s : r.surviving)
      jo["surviving"].push_back({{"order", s.order}, {"generator", s.generator}});
    jo["dying"] = json::array();
    for (const auto& s : r.dying)
      jo["dying"].push_back({{"order", s.order}, {"generator", s.generator}});
    jo["einf"] = json::array();
    for (const Int& d : r.einf_orders) jo["einf"].push_back(to_ll(d));
    jo["match"] = r.einf_match;
    out << jo.dump(2) << '\n';
    return r.einf_match ? 0 : 1;
  }
  out << "degree " << degree << '\n';
  out << "surviving: " << summands_text(r.surviving) << '\n';
  out << "dying: " << summands_text(r.dying) << '\n';
  out << "einf: " << orders_text(r.einf_orders) << '\n';
  out << "match: " << (r.einf_match ? "yes" : "no") << '\n';
  return r.einf_match ? 0 : 1;
}

int cmd_snf(const std::string& path, bool transforms, bool as_json,
            std::ostream& out) {
  intlinalg::IntMatrix a;
  if (path == "-") {
    a = intlinalg::IntMatrix::parse_text(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    a = intlinalg::IntMatrix::parse_text(in);
  }
  intlinalg::SmithDecomposition snf = intlinalg::smith_normal_form(a);

  if (as_json) {
    json j = json_header();
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    j["d"] = json::array();
    for (const Int& d : snf.d) j["d"].push_back(d.get_str());
    auto matrix_json = [](const intlinalg::IntMatrix& m) {
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).get_str());
        rows.push_back(row);
      }
      return rows;
    };
    j["left"] = matrix_json(snf.left);
    j["right"] = matrix_json(snf.right);
    out << j.dump(2) << '\n';
    return 0;
  }

  out << "d:";
  for (const Int& d : snf.d) out << ' ' << d;
  out << '\n';
  if (transforms) {
    out << "left:\n" << snf.left.to_text();
    out << "right:\n" << snf.right.to_text();
  }
  return 0;
}

int cmd_verify_all(bool as_json, std::ostream& out) {
  std::vector<verify::Check> checks = verify::run_all_checks();
  std::size_t failed = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failed;

  if (as_json) {
    json j = json_header();
    j["checks"] = json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name},
                             {"claim", c.claim},
                             {"status", c.pass ? "pass" : "fail"},
                             {"detail", c.detail}});
    j["summary"] = {{"total", checks.size()},
                    {"passed", checks.size() - failed},
                    {"failed", failed}};
    out << j.dump(2) << '\n';
    return failed == 0 ? 0 : 1;
  }

  for (const auto& c : checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  " << c.claim;
    if (!c.pass && !c.detail.empty()) out << " [" << c.detail << ']';
    out << '\n';
  }
  out << checks.size() << " checks: " << (checks.size() - failed)
      << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computations in R(S4) and truncated K-rings of BS4 and"
               " lens spaces"};
  app.require_subcommand(1);

  int chartab_n = 0;
  bool chartab_json = false;
  auto* chartab = app.add_subcommand("chartab", "character table of S_n");
  chartab->add_option("n", chartab_n, "group degree")->required()->check(CLI::Range(1, 8));
  chartab->add_flag("--json", chartab_json, "JSON output");

  std::string restrict_group = "S4", restrict_to, restrict_rep;
  bool restrict_json = false;
  auto* restrict = app.add_subcommand("restrict", "restrict an S4 irreducible to a cyclic subgroup");
  restrict->add_option("--group", restrict_group, "ambient group (only S4)")
      ->check(CLI::IsMember({"S4"}));
  restrict->add_option("--to", restrict_to, "cyclic subgroup: C2, C3 or C4")->required();
  restrict->add_option("--rep", restrict_rep, "representation: d1, d2 or d3")->required();
  restrict->add_flag("--json", restrict_json, "JSON output");

  bool rring_json = false;
  auto* rring = app.add_subcommand("verify-rring", "check the R(S4) relations and their reduced forms");
  rring->add_flag("--json", rring_json, "JSON output");

  bool kring_json = false;
  auto* vkring = app.add_subcommand("verify-kring", "check the K-ring presentation relations");
  vkring->alias("verify-theorem1");
  vkring->add_flag("--json", kring_json, "JSON output");

  std::string order_element;
  int order_skeleton = 0;
  auto* order = app.add_subcommand("order", "order of a reduced class over a skeleton of BS4");
  order->add_option("--element", order_element, "polynomial in v, phi, x, delta")->required();
  order->add_option("--skeleton", order_skeleton, "even skeleton dimension")->required();

  int einf_degree = 0, einf_truncation = 0;
  bool einf_json = false;
  auto* einf = app.add_subcommand("einf", "diagonal filtration quotient E^{2j,-2j}");
  einf->add_option("--degree", einf_degree, "even degree 2j")->required();
  einf->add_option("--truncation", einf_truncation, "truncation degree 2N (default 2(j+2))");
  einf->add_flag("--json", einf_json, "JSON output");

  int lens_n = 0, lens_skeleton = 0;
  std::string lens_pullback;
  bool lens_raw = false, lens_reduced = false, lens_json = false;
  auto* lens_cmd = app.add_subcommand("lens", "truncated K-ring of a lens space and pullbacks from BS4");
  lens_cmd->add_option("--n", lens_n, "cyclic group order")->required()->check(CLI::Range(2, 12));
  lens_cmd->add_option("--skeleton", lens_skeleton, "even skeleton dimension")->required();
  lens_cmd->add_option("--pullback", lens_pullback, "polynomial in v, phi, x, delta to pull back");
  auto* raw_flag = lens_cmd->add_flag("--raw", lens_raw, "print only the raw expansion");
  lens_cmd->add_flag("--reduced", lens_reduced, "print only the reduced normal form")
      ->excludes(raw_flag);
  lens_cmd->add_flag("--json", lens_json, "JSON output");

  int coh_degree = -1;
  bool coh_json = false;
  auto* coh = app.add_subcommand("cohomology", "even cohomology of BS4 in one degree");
  coh->add_option("--degree", coh_degree, "even degree 2j")->required();
  coh->add_flag("--json", coh_json, "JSON output");

  int surv_degree = 0, surv_truncation = 0;
  bool surv_json = false;
  auto* surv = app.add_subcommand("survive", "which cohomology summands survive to the limit page");
  surv->add_option("--degree", surv_degree, "even degree 2j")->required();
  surv->add_option("--truncation", surv_truncation, "truncation degree 2N (default 2(j+2))");
  surv->add_flag("--json", surv_json, "JSON output");

  std::string snf_path = "-";
  bool snf_transforms = false, snf_json = false;
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("file", snf_path, "matrix file (\"rows cols\" header), - for stdin");
  snf->add_flag("--transforms", snf_transforms, "also print the unimodular transforms");
  snf->add_flag("--json", snf_json, "JSON output");

  bool all_json = false;
  auto* all = app.add_subcommand("verify-all", "run the whole claims suite");
  all->add_flag("--json", all_json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return 2;
  }

  try {
    if (chartab->parsed()) return cmd_chartab(chartab_n, chartab_json, out);
    if (restrict->parsed())
      return cmd_restrict(restrict_to, restrict_rep, restrict_json, out);
    if (rring->parsed()) return cmd_verify_rring(rring_json, out);
    if (vkring->parsed()) return cmd_verify_kring(kring_json, out);
    if (order->parsed()) return cmd_order(order_element, order_skeleton, out);
    if (einf->parsed())
      return cmd_einf(einf_degree, einf_truncation, einf_json, out);
    if (lens_cmd->parsed())
      return cmd_lens(lens_n, lens_skeleton, lens_pullback, lens_raw,
                      lens_reduced, lens_json, out);
    if (coh->parsed()) return cmd_cohomology(coh_degree, coh_json, out);
    if (surv->parsed())
      return cmd_survive(surv_degree, surv_truncation, surv_json, out);
    if (snf->parsed()) return cmd_snf(snf_path, snf_transforms, snf_json, out);
    if (all->parsed()) return cmd_verify_all(all_json, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace kbs4::cli
