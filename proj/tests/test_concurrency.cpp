#include <thread>
#include <vector>

#include "doctest.h"
#include "kbs4/kring.hpp"
#include "kbs4/repring.hpp"
#include "kbs4/symchars.hpp"

// The library promises pure, reentrant operations and freely shareable
// values after construction.

TEST_CASE("concurrent queries agree with single-threaded results") {
  const auto baseline_table = kbs4::symchars::character_table(6)->values;
  const auto baseline_einf = kbs4::kring::einfinity(2, 4).orders();
  const auto& ctx = kbs4::repring::S4Context::get();
  const auto baseline_restrict =
      kbs4::repring::restrict_to_cyclic(ctx.d3, 4).multiplicities;

  std::vector<int> failures(8, 0);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < failures.size(); ++w) {
    workers.emplace_back([&, w] {
      for (int round = 0; round < 5; ++round) {
        if (kbs4::symchars::character_table(6)->values != baseline_table)
          failures[w] = 1;
        if (kbs4::kring::einfinity(2, 4).orders() != baseline_einf)
          failures[w] = 1;
        const auto& local = kbs4::repring::S4Context::get();
        if (kbs4::repring::restrict_to_cyclic(local.d3, 4).multiplicities !=
            baseline_restrict)
          failures[w] = 1;
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int f : failures) CHECK(f == 0);
}
