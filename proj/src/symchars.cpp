#include "kbs4/symchars.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kbs4::symchars {

int Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::is_hook() const {
  return parts.size() <= 1 || parts[1] == 1;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ']';
  return os.str();
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    enumerate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("partitions: need 1 <= n <= 12");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate(n, n, cur, out);
  return out;
}

long long class_size(const Partition& cycle_type) {
  const int n = cycle_type.n();
  if (n < 1 || n > 12) throw std::invalid_argument("class_size: need 1 <= n <= 12");
  // centralizer order = prod_k k^{m_k} m_k!  over part multiplicities m_k
  long long centralizer = 1;
  std::size_t i = 0;
  while (i < cycle_type.parts.size()) {
    std::size_t j = i;
    while (j < cycle_type.parts.size() && cycle_type.parts[j] == cycle_type.parts[i]) ++j;
    const long long mult = static_cast<long long>(j - i);
    for (long long m = 1; m <= mult; ++m) centralizer *= m * cycle_type.parts[i];
    // the loop above multiplies k^mult * mult! one factor (k*m) at a time
    i = j;
  }
  return factorial(n) / centralizer;
}

Partition power_cycle_type(int cycle_len, long long j, int degree) {
  if (cycle_len < 1 || cycle_len > degree)
    throw std::invalid_argument("power_cycle_type: bad cycle length");
  const long long g = std::gcd(static_cast<long long>(cycle_len),
                               ((j % cycle_len) + cycle_len) % cycle_len);
  std::vector<int> parts;
  const int piece = static_cast<int>(cycle_len / g);
  for (long long i = 0; i < g; ++i) parts.push_back(piece);
  for (int i = 0; i < degree - cycle_len; ++i) parts.push_back(1);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition{parts};
}

namespace {

// Rim hook removals of length len from the shape encoded as a beta-set
// (first-column hook lengths). Returns (new shape, leg length) pairs.
std::vector<std::pair<Partition, int>> rim_hook_removals(const Partition& shape,
                                                         int len) {
  const int k = static_cast<int>(shape.parts.size());
  std::vector<int> beta(k);
  for (int i = 0; i < k; ++i) beta[i] = shape.parts[i] + (k - 1 - i);
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < k; ++i) {
    const int b = beta[i];
    if (b < len) continue;
    const int target = b - len;
    bool occupied = false;
    int between = 0;
    for (int t = 0; t < k; ++t) {
      if (t == i) continue;
      if (beta[t] == target) occupied = true;
      if (beta[t] > target && beta[t] < b) ++between;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> parts;
    for (int t = 0; t < k; ++t) {
      int part = nb[t] - (k - 1 - t);
      if (part > 0) parts.push_back(part);
    }
    out.push_back({Partition{parts}, between});
  }
  return out;
}

using Memo = std::map<std::pair<std::vector<int>, std::size_t>, long long>;

long long mn_rec(const Partition& shape, const Partition& rho, std::size_t idx,
                 Memo& memo) {
  if (shape.parts.empty()) return 1;  // both exhausted (sums always match)
  auto key = std::make_pair(shape.parts, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int len = rho.parts[idx];
  long long total = 0;
  for (const auto& [rest, leg] : rim_hook_removals(shape, len)) {
    long long term = mn_rec(rest, rho, idx + 1, memo);
    total += (leg % 2 == 0) ? term : -term;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long long mn_character(const Partition& shape, const Partition& cycle_type) {
  if (shape.n() != cycle_type.n())
    throw std::invalid_argument("mn_character: size mismatch");
  Memo memo;
  return mn_rec(shape, cycle_type, 0, memo);
}

std::size_t CharacterTable::class_index(const Partition& cycle_type) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == cycle_type) return i;
  throw std::invalid_argument("class_index: unknown cycle type " + cycle_type.to_string());
}

std::vector<long long> CharacterTable::dimensions() const {
  std::vector<long long> out;
  for (const auto& row : values) out.push_back(row[identity_class()]);
  return out;
}

std::shared_ptr<const CharacterTable> character_table(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("character_table: need 1 <= n <= 8");
  auto t = std::make_shared<CharacterTable>();
  t->n = n;
  t->classes = partitions(n);
  t->irreps = t->classes;
  for (const auto& c : t->classes) t->class_sizes.push_back(class_size(c));
  for (const auto& shape : t->irreps) {
    std::vector<long long> row;
    for (const auto& c : t->classes) row.push_back(mn_character(shape, c));
    t->values.push_back(std::move(row));
  }
  for (const auto& shape : t->irreps) t->hook.push_back(shape.is_hook());
  return t;
}

S4Irreps identify_s4_irreps(const CharacterTable& t) {
  if (t.n != 4) throw std::invalid_argument("identify_s4_irreps: table is not S4");
  std::vector<long long> dims = t.dimensions();
  std::vector<long long> sorted = dims;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<long long>{1, 1, 2, 3, 3})
    throw std::invalid_argument("identify_s4_irreps: unexpected dimensions");

  S4Irreps r{};
  bool found_one = false, found_d1 = false;
  const std::size_t two_class = t.class_index(Partition{{2, 1, 1}});
  std::vector<std::size_t> dim3;
  for (std::size_t i = 0; i < t.irreps.size(); ++i) {
    if (dims[i] == 1) {
      bool all_ones = true;
      for (long long v : t.values[i]) all_ones = all_ones && v == 1;
      if (all_ones) {
        r.one = i;
        found_one = true;
      } else {
        r.d1 = i;
        found_d1 = true;
      }
    } else if (dims[i] == 2) {
      r.d2 = i;
    } else {
      dim3.push_back(i);
    }
  }
  if (!found_one || !found_d1)
    throw std::invalid_argument("identify_s4_irreps: missing a 1-dimensional row");
  // d3 is the 3-dimensional row with value +1 on the transposition class.
  if (t.values[dim3[0]][two_class] == 1) {
    r.d3 = dim3[0];
    r.d1d3 = dim3[1];
  } else {
    r.d3 = dim3[1];
    r.d1d3 = dim3[0];
  }
  if (t.values[r.d3][two_class] != 1)
    throw std::invalid_argument("identify_s4_irreps: no standard row");
  return r;
}

}  // namespace kbs4::symchars
