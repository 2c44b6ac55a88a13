#include "fairstream/solvers.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "fairstream/errors.hpp"

namespace fairstream {

GreedyReport run_greedy(const ValueOracle& oracle, const GroupMap& groups,
                        const FairnessSpec& spec) {
  spec.require_feasible(sizes_for(groups, spec));
  CandidateSolution sol(oracle, groups, spec);
  const std::uint64_t start_calls = oracle.call_count();
  const std::size_t k = spec.total();
  for (std::size_t round = 0; round < k; ++round) {
    double best_gain = -1.0;
    ItemId best = 0;
    for (ItemId v = 0; v < groups.size(); ++v) {
      if (sol.contains(v) || sol.group_full(groups[v])) continue;
      const double g = sol.gain(v);
      if (g > best_gain) {
        best_gain = g;
        best = v;
      }
    }
    sol.add(best);
  }
  return {std::move(sol), k, oracle.call_count() - start_calls};
}

GreedyReport run_lazy_greedy(const ValueOracle& oracle, const GroupMap& groups,
                             const FairnessSpec& spec) {
  spec.require_feasible(sizes_for(groups, spec));
  CandidateSolution sol(oracle, groups, spec);
  const std::uint64_t start_calls = oracle.call_count();
  const std::size_t k = spec.total();

  struct Entry {
    double gain;
    ItemId item;
    std::size_t stamp;  // solution size the gain was computed against
  };
  // Max-heap on gain; equal gains pop in ascending id order so the result
  // matches the eager scan exactly.
  const auto worse = [](const Entry& a, const Entry& b) {
    return a.gain != b.gain ? a.gain < b.gain : a.item > b.item;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (ItemId v = 0; v < groups.size(); ++v) {
    if (spec.budget(groups[v]) == 0) continue;
    heap.push({sol.gain(v), v, 0});
  }

  while (sol.size() < k) {
    Entry top = heap.top();
    heap.pop();
    if (sol.group_full(groups[top.item])) continue;
    if (top.stamp == sol.size()) {
      sol.add(top.item);
    } else {
      heap.push({sol.gain(top.item), top.item, sol.size()});
    }
  }
  return {std::move(sol), k, oracle.call_count() - start_calls};
}

namespace {

/// C(n, r) capped at `cap` + 1 so guard comparisons never overflow.
std::uint64_t capped_binomial(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(result);
}

/// Calls fn for every r-combination of items, in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<ItemId>& items, std::size_t r, Fn&& fn) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<ItemId> combo(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) combo[i] = items[idx[i]];
    fn(combo);
    // Advance the rightmost index that still has room.
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == items.size() - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct BruteForceSearch {
  const std::vector<std::vector<ItemId>>& items_by_group;
  const FairnessSpec& spec;
  double best_utility = -std::numeric_limits<double>::infinity();
  std::vector<ItemId> best_selection;

  void descend(GroupId g, const CandidateSolution& partial) {
    if (g == spec.group_total()) {
      std::vector<ItemId> sorted = partial.selection();
      std::sort(sorted.begin(), sorted.end());
      const double u = partial.utility();
      if (u > best_utility || (u == best_utility && sorted < best_selection)) {
        best_utility = u;
        best_selection = std::move(sorted);
      }
      return;
    }
    if (spec.budget(g) == 0) {
      descend(g + 1, partial);
      return;
    }
    for_each_combination(items_by_group[g], spec.budget(g), [&](const std::vector<ItemId>& combo) {
      CandidateSolution next = partial;
      for (ItemId v : combo) next.add(v);
      descend(g + 1, next);
    });
  }
};

}  // namespace

CandidateSolution brute_force_opt(const ValueOracle& oracle, const GroupMap& groups,
                                  const FairnessSpec& spec, std::uint64_t enumeration_guard) {
  const auto sizes = sizes_for(groups, spec);
  spec.require_feasible(sizes);

  std::uint64_t leaves = 1;
  for (GroupId g = 0; g < spec.group_total(); ++g) {
    const std::uint64_t combos = capped_binomial(sizes[g], spec.budget(g), enumeration_guard);
    if (combos > enumeration_guard / std::max<std::uint64_t>(leaves, 1) &&
        leaves * combos > enumeration_guard) {
      throw SizeGuardError("enumeration would exceed " + std::to_string(enumeration_guard) +
                           " fair sets");
    }
    leaves *= combos;
  }

  std::vector<std::vector<ItemId>> items_by_group(spec.group_total());
  for (ItemId v = 0; v < groups.size(); ++v) {
    if (groups[v] < items_by_group.size()) items_by_group[groups[v]].push_back(v);
  }

  BruteForceSearch search{items_by_group, spec, -std::numeric_limits<double>::infinity(), {}};
  search.descend(0, CandidateSolution(oracle, groups, spec));

  CandidateSolution best(oracle, groups, spec);
  for (ItemId v : search.best_selection) best.add(v);
  return best;
}

}  // namespace fairstream
