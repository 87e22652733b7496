#include "kbs4/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = kbs4::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("einf prints the expected summands") {
  Result r = run({"einf", "--degree", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z2 + Z12\n");

  Result deeper = run({"einf", "--degree", "4", "--truncation", "12"});
  CHECK(deeper.out == "Z2 + Z12\n");

  Result json_out = run({"einf", "--degree", "4", "--json"});
  auto j = nlohmann::json::parse(json_out.out);
  CHECK(j["schema"] == 1);
  CHECK(j["degree"] == 4);
  CHECK(j["summands"][0]["order"] == 2);
  CHECK(j["summands"][0]["generator"] == "v^2");
  CHECK(j["summands"][1]["order"] == 12);
  CHECK(j["summands"][1]["generator"] == "x");
}

TEST_CASE("order reports group-theoretic orders over skeleta") {
  CHECK(run({"order", "--element", "x", "--skeleton", "4"}).out == "12\n");
  CHECK(run({"order", "--element", "v", "--skeleton", "4"}).out == "4\n");
  CHECK(run({"order", "--element", "v", "--skeleton", "2"}).out == "2\n");
  // phi = x - v has order lcm(4, 12) = 12 in the 4-skeleton model and 24
  // one truncation deeper
  CHECK(run({"order", "--element", "phi", "--skeleton", "4"}).out == "12\n");
  CHECK(run({"order", "--element", "phi", "--skeleton", "6"}).out == "24\n");

  Result bad = run({"order", "--element", "phi + 1", "--skeleton", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(!bad.err.empty());
}

TEST_CASE("chartab text output is stable") {
  Result r = run({"chartab", "4"});
  CHECK(r.code == 0);
  const std::string expected =
      "class       [4]  [3,1]  [2,2]  [2,1,1]  [1,1,1,1]\n"
      "size          6      8      3        6          1\n"
      "[4]*          1      1      1        1          1\n"
      "[3,1]*       -1      0     -1        1          3\n"
      "[2,2]         0     -1      2        0          2\n"
      "[2,1,1]*      1      0     -1       -1          3\n"
      "[1,1,1,1]*   -1      1      1       -1          1\n"
      "# * marks hook shapes\n";
  CHECK(r.out == expected);

  Result j = run({"chartab", "4", "--json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["schema"] == 1);
  CHECK(parsed["class_sizes"] == nlohmann::json({6, 8, 3, 6, 1}));
  CHECK(parsed["values"][0] == nlohmann::json({1, 1, 1, 1, 1}));
}

TEST_CASE("restrict matches the stated restrictions") {
  Result r = run({"restrict", "--group", "S4", "--to", "C4", "--rep", "d3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "res(d3) | C4 = eta + eta^2 + eta^3\n"
        "multiplicities: 0 1 1 1\n");

  Result z2 = run({"restrict", "--to", "C2", "--rep", "d3"});
  CHECK(z2.out ==
        "res(d3) | C2 = 2 + eta\n"
        "multiplicities: 2 1\n");

  Result bad = run({"restrict", "--to", "C5", "--rep", "d3"});
  CHECK(bad.code == 2);
}

TEST_CASE("verify-rring passes every relation") {
  Result r = run({"verify-rring"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS  d1^2 = 1") != std::string::npos);
  CHECK(r.out.find("PASS  2*v = -v^2") != std::string::npos);
  CHECK(r.out.find("all relations hold") != std::string::npos);
}

TEST_CASE("verify-kring passes and keeps its alias") {
  Result r = run({"verify-kring"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  Result alias = run({"verify-theorem1"});
  CHECK(alias.code == 0);
  CHECK(alias.out == r.out);
}

TEST_CASE("lens subcommand") {
  Result r = run({"lens", "--n", "3", "--skeleton", "4", "--pullback", "phi"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "group: Z3 + Z3\n"
        "raw: 3*mu + mu^2\n"
        "reduced: mu^2\n"
        "order: 3\n");

  CHECK(run({"lens", "--n", "3", "--skeleton", "4", "--pullback", "phi",
             "--raw"}).out == "3*mu + mu^2\n");
  CHECK(run({"lens", "--n", "4", "--skeleton", "6", "--pullback", "phi",
             "--reduced"}).out == "2*mu + 2*mu^2 + 3*mu^3\n");
  CHECK(run({"lens", "--n", "4", "--skeleton", "4"}).out == "group: Z2 + Z8\n");

  Result both = run({"lens", "--n", "3", "--skeleton", "4", "--pullback",
                     "phi", "--raw", "--reduced"});
  CHECK(both.code == 2);
}

TEST_CASE("cohomology and survive") {
  CHECK(run({"cohomology", "--degree", "0"}).out == "Z\n");
  CHECK(run({"cohomology", "--degree", "4"}).out ==
        "Z2(a2^2) + Z4(a4) + Z3(b4)\n");

  Result s = run({"survive", "--degree", "6"});
  CHECK(s.code == 0);
  CHECK(s.out ==
        "degree 6\n"
        "surviving: Z2(a2^3) + Z2(a2*a4)\n"
        "dying: Z2(a3^2)\n"
        "einf: Z2 + Z2\n"
        "match: yes\n");
}

TEST_CASE("snf subcommand reads the exchange format") {
  const std::string path = "cli_snf_input.txt";
  {
    std::ofstream f(path);
    f << "2 2\n4 6\n0 4\n";
  }
  Result r = run({"snf", path});
  CHECK(r.code == 0);
  CHECK(r.out == "d: 2 8\n");

  Result j = run({"snf", path, "--json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["d"] == nlohmann::json({"2", "8"}));
  std::remove(path.c_str());

  Result missing = run({"snf", "no_such_file.txt"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  Result unknown = run({"einf", "--degree", "4", "--frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(!unknown.err.empty());

  Result none = run({});
  CHECK(none.code == 2);

  Result badsub = run({"no-such-command"});
  CHECK(badsub.code == 2);

  CHECK(run({"order", "--element", "phi", "--skeleton", "3"}).code == 2);
  CHECK(run({"cohomology", "--degree", "5"}).code == 2);
  CHECK(run({"einf", "--degree", "8", "--truncation", "6"}).code == 2);
  CHECK(run({"lens", "--n", "3", "--skeleton", "4", "--raw"}).code == 2);
  CHECK(run({"chartab", "9"}).code == 2);

  Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("chartab") != std::string::npos);

  Result subhelp = run({"einf", "--help"});
  CHECK(subhelp.code == 0);
  CHECK(subhelp.out.find("--truncation") != std::string::npos);
}

TEST_CASE("KRING_TRUNCATION selects the default truncation") {
  // deep enough to change nothing for degree 4 (stability), and validated
  setenv("KRING_TRUNCATION", "14", 1);
  Result r = run({"einf", "--degree", "4"});
  unsetenv("KRING_TRUNCATION");
  CHECK(r.code == 0);
  CHECK(r.out == "Z2 + Z12\n");

  setenv("KRING_TRUNCATION", "nonsense", 1);
  Result bad = run({"einf", "--degree", "4"});
  unsetenv("KRING_TRUNCATION");
  CHECK(bad.code == 2);

  setenv("KRING_TRUNCATION", "7", 1);
  Result odd = run({"einf", "--degree", "4"});
  unsetenv("KRING_TRUNCATION");
  CHECK(odd.code == 2);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"chartab", "6"},
        std::vector<std::string>{"einf", "--degree", "8", "--json"},
        std::vector<std::string>{"verify-rring", "--json"},
        std::vector<std::string>{"cohomology", "--degree", "24", "--json"}}) {
    Result a = run(args);
    Result b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify-all flags exactly the claims that do not check out") {
  Result r = run({"verify-all"});
  CHECK(r.code == 1);

  Result j = run({"verify-all", "--json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["schema"] == 1);
  CHECK(parsed["summary"]["total"].get<int>() >= 20);

  // the claims that fail verification: the two misprinted Z2 restrictions,
  // the filtration table from degree 8 on (and its survival comparisons),
  // and the order-24 claim for phi over the 4-skeleton
  const std::set<std::string> expected_failures = {
      "restrict/Z2-d2",
      "restrict/Z2-d3",
      "einf/degree-8",
      "einf/degree-10",
      "einf/degree-12",
      "kring/order-phi-4-skeleton",
      "cohomology/survival-8",
      "cohomology/survival-10",
      "cohomology/survival-12",
  };
  std::set<std::string> failures;
  for (const auto& c : parsed["checks"]) {
    CHECK(c["claim"].get<std::string>().size() > 0);
    if (c["status"] == "fail") failures.insert(c["name"].get<std::string>());
  }
  CHECK(failures == expected_failures);
  CHECK(parsed["summary"]["failed"].get<std::size_t>() == expected_failures.size());
}
