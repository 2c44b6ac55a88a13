#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "fairstream/errors.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/rng.hpp"

using namespace fairstream;

TEST_SUITE("fairness") {

TEST_CASE("proportional budgets follow the quotas") {
  CHECK(allocate_proportional({6, 4}, 5).budgets() == std::vector<std::size_t>{3, 2});
  CHECK(allocate_proportional({5, 3, 2}, 4).budgets() == std::vector<std::size_t>{2, 1, 1});
  CHECK(allocate_proportional({10, 0}, 3).budgets() == std::vector<std::size_t>{3, 0});
  CHECK(allocate_proportional({6, 4}, 0).budgets() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("proportional rejects k beyond the ground set") {
  CHECK_THROWS_AS(allocate_proportional({2, 2}, 5), InfeasibleBudgetError);
}

TEST_CASE("equal budgets split evenly with remainder to larger groups") {
  CHECK(allocate_equal({100, 100}, 10).budgets() == std::vector<std::size_t>{5, 5});
  CHECK(allocate_equal({50, 30, 20}, 10).budgets() == std::vector<std::size_t>{4, 3, 3});
}

TEST_CASE("equal budgets clamp to small groups and reassign the overflow") {
  CHECK(allocate_equal({3, 100}, 10).budgets() == std::vector<std::size_t>{3, 7});
}

TEST_CASE("equal rejects k beyond the ground set naming deficient groups") {
  CHECK_THROWS_AS(allocate_equal({1, 1}, 3), InfeasibleBudgetError);
  CHECK_THROWS_WITH_AS(allocate_equal({1, 5}, 7), doctest::Contains("deficient"),
                       InfeasibleBudgetError);
}

TEST_CASE("fairness check demands exact per-group counts") {
  const GroupMap groups = {0, 0, 1, 1};

  CHECK(is_fair({}, groups, FairnessSpec({0, 0})));
  CHECK(is_fair({0, 2}, groups, FairnessSpec({1, 1})));
  CHECK(!is_fair({0, 1}, groups, FairnessSpec({1, 1})));
  CHECK(!is_fair({0}, groups, FairnessSpec({1, 1})));

  // Items from a zero-budget group disqualify the selection.
  CHECK(!is_fair({0, 2}, groups, FairnessSpec({1, 0})));
  CHECK(is_fair({0}, groups, FairnessSpec({1, 0})));

  // Unknown items can never be fair.
  CHECK(!is_fair({9}, groups, FairnessSpec({1, 0})));
}

TEST_CASE("spec accessors and feasibility") {
  FairnessSpec spec({2, 0, 3});
  CHECK(spec.group_total() == 3);
  CHECK(spec.total() == 5);
  CHECK(spec.budget(0) == 2);
  CHECK(spec.budget(2) == 3);
  CHECK(spec.budget(7) == 0);  // out-of-range groups have no budget

  CHECK_NOTHROW(spec.require_feasible({2, 0, 3}));
  CHECK_THROWS_AS(spec.require_feasible({1, 0, 3}), InfeasibleBudgetError);
  CHECK_THROWS_AS(spec.require_feasible({2, 0}), InfeasibleBudgetError);
}

TEST_CASE("apportionments always sum to k and respect group sizes") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    Rng rng(seed);
    const std::size_t l = 1 + rng.bounded(6);
    std::vector<std::size_t> sizes(l);
    std::size_t n = 0;
    for (auto& s : sizes) {
      s = rng.bounded(50);
      n += s;
    }
    if (n == 0) continue;
    const std::size_t k = rng.bounded(n + 1);

    const auto pr = allocate_proportional(sizes, k);
    CHECK(pr.total() == k);
    const auto er = allocate_equal(sizes, k);
    CHECK(er.total() == k);
    for (GroupId g = 0; g < l; ++g) {
      CHECK(pr.budget(g) <= sizes[g]);
      CHECK(er.budget(g) <= sizes[g]);

      // Largest-remainder stays within one seat of the exact quota.
      const double quota = static_cast<double>(sizes[g]) * k / n;
      CHECK(std::abs(static_cast<double>(pr.budget(g)) - quota) < 1.0);
    }

    // Identical inputs must reproduce identical budgets.
    CHECK(allocate_proportional(sizes, k).budgets() == pr.budgets());
    CHECK(allocate_equal(sizes, k).budgets() == er.budgets());
  }
}

}  // TEST_SUITE
