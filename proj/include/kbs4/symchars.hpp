// Combinatorics of the symmetric group S_n: partitions, conjugacy classes
// and their sizes, and exact irreducible character tables computed with the
// Murnaghan-Nakayama rule.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace kbs4::symchars {

/// Weakly decreasing list of positive parts. Doubles as a cycle type
/// (conjugacy class) and as an irreducible label (Young diagram shape).
struct Partition {
  std::vector<int> parts;

  int n() const;
  bool is_hook() const;  // at most one part exceeds 1
  std::string to_string() const;  // "[3,1]"

  auto operator<=>(const Partition&) const = default;
};

/// All partitions of n in reverse-lexicographic order: [n] first, [1^n] last.
std::vector<Partition> partitions(int n);  // 1 <= n <= 12

/// Number of permutations with the given cycle type, n! / centralizer order.
long long class_size(const Partition& cycle_type);

/// Cycle type of the j-th power of an n-cycle inside S_degree.
Partition power_cycle_type(int cycle_len, long long j, int degree);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> classes;           // cycle types, reverse-lex
  std::vector<long long> class_sizes;
  std::vector<Partition> irreps;            // shapes, reverse-lex
  std::vector<std::vector<long long>> values;  // irreps x classes
  std::vector<bool> hook;                   // per irrep

  std::size_t identity_class() const { return classes.size() - 1; }
  std::size_t class_index(const Partition& cycle_type) const;
  std::vector<long long> dimensions() const;
};

/// Full character table of S_n; values exact. 1 <= n <= 8.
std::shared_ptr<const CharacterTable> character_table(int n);

/// chi_shape(cycle_type) by Murnaghan-Nakayama recursion over rim hooks.
long long mn_character(const Partition& shape, const Partition& cycle_type);

/// Row indices of the five irreducibles of S_4 in the conventions
/// 1 (trivial), d1 (sign), d2 (dimension 2), d3 (standard, value +1 on the
/// class [2,1,1]) and d1d3.
struct S4Irreps {
  std::size_t one, d1, d2, d3, d1d3;
};
S4Irreps identify_s4_irreps(const CharacterTable& t);

}  // namespace kbs4::symchars
