#include "kbs4/symchars.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "doctest.h"

using namespace kbs4::symchars;

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Independent partition counter (Euler recurrence via part-bounded counts).
long long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return count_partitions(n - max_part, max_part) + count_partitions(n, max_part - 1);
}

// Cycle type of a permutation given as images, independent of the library.
Partition cycle_type_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = perm[static_cast<std::size_t>(j)];
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition{parts};
}

// Tabloid count fixed by a permutation of the given cycle type: the number
// of ways to distribute the (labeled) cycles over rows of sizes lambda.
long long fixed_tabloids(const Partition& shape, const Partition& cycle_type) {
  std::vector<int> remaining = shape.parts;
  std::function<long long(std::size_t)> place = [&](std::size_t idx) -> long long {
    if (idx == cycle_type.parts.size()) return 1;
    long long total = 0;
    for (auto& cap : remaining) {
      if (cap < cycle_type.parts[idx]) continue;
      cap -= cycle_type.parts[idx];
      total += place(idx + 1);
      cap += cycle_type.parts[idx];
    }
    return total;
  };
  return place(0);
}

// Brute-force character table: permutation characters on tabloids, then
// Gram-Schmidt over the invariant inner product in reverse-lex order.
std::vector<std::vector<long long>> projection_oracle_table(int n) {
  const std::vector<Partition> parts = partitions(n);
  std::vector<long long> sizes;
  for (const auto& p : parts) sizes.push_back(class_size(p));
  const long long order = factorial(n);

  auto inner = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
    long long dot = 0;
    for (std::size_t c = 0; c < a.size(); ++c) dot += sizes[c] * a[c] * b[c];
    REQUIRE(dot % order == 0);
    return dot / order;
  };

  std::vector<std::vector<long long>> chars;
  for (const auto& shape : parts) {
    std::vector<long long> v;
    for (const auto& cls : parts) v.push_back(fixed_tabloids(shape, cls));
    for (const auto& prev : chars) {
      long long c = inner(v, prev);
      REQUIRE(c >= 0);  // Kostka numbers
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * prev[i];
    }
    REQUIRE(inner(v, v) == 1);
    chars.push_back(std::move(v));
  }
  return chars;
}

}  // namespace

TEST_CASE("partitions of 4 in reverse-lexicographic order") {
  auto p = partitions(4);
  REQUIRE(p.size() == 5);  // five conjugacy classes of S4
  CHECK(p[0].parts == std::vector<int>{4});
  CHECK(p[1].parts == std::vector<int>{3, 1});
  CHECK(p[2].parts == std::vector<int>{2, 2});
  CHECK(p[3].parts == std::vector<int>{2, 1, 1});
  CHECK(p[4].parts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition enumeration is complete and ordered") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(5).size() == 7);
  CHECK_THROWS_AS(partitions(0), std::invalid_argument);
  CHECK_THROWS_AS(partitions(13), std::invalid_argument);
  for (int n = 1; n <= 9; ++n) {
    auto list = partitions(n);
    CHECK(static_cast<long long>(list.size()) == count_partitions(n, n));
    for (std::size_t i = 0; i + 1 < list.size(); ++i)
      CHECK(list[i].parts > list[i + 1].parts);  // strictly descending lex
    for (const auto& p : list) {
      CHECK(p.n() == n);
      CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    }
  }
}

TEST_CASE("class sizes against direct enumeration of S4") {
  // enumerate all 24 permutations and bucket by cycle type
  std::map<std::vector<int>, long long> census;
  std::vector<int> perm = {0, 1, 2, 3};
  std::sort(perm.begin(), perm.end());
  do {
    census[cycle_type_of(perm).parts] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));

  CHECK(census.at({2, 1, 1}) == 6);  // the transpositions
  CHECK(census.at({2, 2}) == 3);
  for (const auto& p : partitions(4)) CHECK(class_size(p) == census.at(p.parts));
  CHECK(class_size(Partition{{1, 1, 1, 1}}) == 1);
}

TEST_CASE("class sizes sum to n!") {
  for (int n = 1; n <= 10; ++n) {
    long long total = 0;
    for (const auto& p : partitions(n)) total += class_size(p);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("powers of a cycle split combinatorially") {
  CHECK(power_cycle_type(4, 0, 4).parts == std::vector<int>{1, 1, 1, 1});
  CHECK(power_cycle_type(4, 1, 4).parts == std::vector<int>{4});
  CHECK(power_cycle_type(4, 2, 4).parts == std::vector<int>{2, 2});
  CHECK(power_cycle_type(4, 3, 4).parts == std::vector<int>{4});
  CHECK(power_cycle_type(3, 2, 4).parts == std::vector<int>{3, 1});
  CHECK(power_cycle_type(2, 1, 4).parts == std::vector<int>{2, 1, 1});
}

TEST_CASE("S4 character table matches the frozen matrix") {
  auto t = character_table(4);
  REQUIRE(t->classes.size() == 5);
  // classes in reverse-lex order: [4], [3,1], [2,2], [2,1,1], [1,1,1,1]
  CHECK(t->class_sizes == std::vector<long long>{6, 8, 3, 6, 1});

  // frozen via the projection oracle, cross-checked by orthogonality
  const std::vector<std::vector<long long>> expected = {
      {1, 1, 1, 1, 1},     // [4]: trivial
      {-1, 0, -1, 1, 3},   // [3,1]: standard d3
      {0, -1, 2, 0, 2},    // [2,2]: d2
      {1, 0, -1, -1, 3},   // [2,1,1]: d1*d3
      {-1, 1, 1, -1, 1},   // [1,1,1,1]: sign d1
  };
  CHECK(t->values == expected);
  CHECK(t->hook == std::vector<bool>{true, true, false, true, true});
}

TEST_CASE("character tables satisfy orthogonality and the dimension identity") {
  for (int n = 1; n <= 8; ++n) {
    auto t = character_table(n);
    const long long order = factorial(n);
    long long dimsq = 0;
    for (std::size_t i = 0; i < t->irreps.size(); ++i) {
      const long long dim = t->values[i][t->identity_class()];
      CHECK(dim > 0);
      dimsq += dim * dim;
      for (std::size_t j = i; j < t->irreps.size(); ++j) {
        long long dot = 0;
        for (std::size_t c = 0; c < t->classes.size(); ++c)
          dot += t->class_sizes[c] * t->values[i][c] * t->values[j][c];
        CHECK(dot == (i == j ? order : 0));
      }
    }
    CHECK(dimsq == order);

    // column orthogonality: sum over irreps of chi(C) chi(C') = centralizer
    for (std::size_t c = 0; c < t->classes.size(); ++c)
      for (std::size_t c2 = c; c2 < t->classes.size(); ++c2) {
        long long dot = 0;
        for (std::size_t i = 0; i < t->irreps.size(); ++i)
          dot += t->values[i][c] * t->values[i][c2];
        CHECK(dot == (c == c2 ? order / t->class_sizes[c] : 0));
      }
  }
}

TEST_CASE("Murnaghan-Nakayama agrees with the tabloid projection oracle") {
  for (int n = 1; n <= 5; ++n) {
    auto t = character_table(n);
    CHECK(t->values == projection_oracle_table(n));
  }
}

TEST_CASE("identify the S4 irreducibles") {
  auto t = character_table(4);
  S4Irreps rows = identify_s4_irreps(*t);
  CHECK(t->irreps[rows.one].parts == std::vector<int>{4});
  CHECK(t->irreps[rows.d1].parts == std::vector<int>{1, 1, 1, 1});
  CHECK(t->irreps[rows.d2].parts == std::vector<int>{2, 2});
  CHECK(t->irreps[rows.d3].parts == std::vector<int>{3, 1});
  CHECK(t->irreps[rows.d1d3].parts == std::vector<int>{2, 1, 1});

  // d3 distinguished from d1*d3 by its value on the transpositions
  const std::size_t c = t->class_index(Partition{{2, 1, 1}});
  CHECK(t->values[rows.d3][c] == 1);
  CHECK(t->values[rows.d1d3][c] == -1);

  CHECK_THROWS_AS(identify_s4_irreps(*character_table(3)), std::invalid_argument);
}

TEST_CASE("table bounds") {
  CHECK_THROWS_AS(character_table(0), std::invalid_argument);
  CHECK_THROWS_AS(character_table(9), std::invalid_argument);
  auto t1 = character_table(1);
  CHECK(t1->values == std::vector<std::vector<long long>>{{1}});
}
