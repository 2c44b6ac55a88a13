#include "fairstream/fairness.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

namespace fairstream {

FairnessSpec::FairnessSpec(std::vector<std::size_t> budgets)
    : budgets_(std::move(budgets)),
      total_(std::accumulate(budgets_.begin(), budgets_.end(), std::size_t{0})) {}

void FairnessSpec::require_feasible(const std::vector<std::size_t>& sizes) const {
  if (sizes.size() < budgets_.size()) {
    throw InfeasibleBudgetError("spec names " + std::to_string(budgets_.size()) +
                                " groups but only " + std::to_string(sizes.size()) + " exist");
  }
  for (GroupId g = 0; g < budgets_.size(); ++g) {
    if (budgets_[g] > sizes[g]) {
      throw InfeasibleBudgetError("group " + std::to_string(g) + " holds " +
                                  std::to_string(sizes[g]) + " items, budget is " +
                                  std::to_string(budgets_[g]));
    }
  }
}

namespace {

/// Group order used for ER remainder seats and clamp overflow: descending
/// size, then lower id.
std::vector<GroupId> by_descending_size(const std::vector<std::size_t>& sizes) {
  std::vector<GroupId> order(sizes.size());
  std::iota(order.begin(), order.end(), GroupId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](GroupId a, GroupId b) { return sizes[a] > sizes[b]; });
  return order;
}

}  // namespace

FairnessSpec allocate_proportional(const std::vector<std::size_t>& group_sizes, std::size_t k) {
  const std::size_t n = std::accumulate(group_sizes.begin(), group_sizes.end(), std::size_t{0});
  if (k > n) {
    throw InfeasibleBudgetError("k = " + std::to_string(k) + " exceeds ground set size " +
                                std::to_string(n));
  }
  if (k == 0 || n == 0) return FairnessSpec(std::vector<std::size_t>(group_sizes.size(), 0));

  // Exact Hamilton apportionment in integer arithmetic: floor(n_i k / n) plus
  // spare seats by descending remainder n_i k mod n, ties to the lower id.
  const std::size_t l = group_sizes.size();
  std::vector<std::size_t> budgets(l);
  std::vector<std::pair<std::uint64_t, GroupId>> remainders;
  std::size_t assigned = 0;
  for (GroupId g = 0; g < l; ++g) {
    const std::uint64_t num = static_cast<std::uint64_t>(group_sizes[g]) * k;
    budgets[g] = static_cast<std::size_t>(num / n);
    assigned += budgets[g];
    remainders.emplace_back(num % n, g);
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (std::size_t i = 0; assigned < k; ++i, ++assigned) {
    ++budgets[remainders[i].second];
  }
  for (GroupId g = 0; g < l; ++g) assert(budgets[g] <= group_sizes[g]);
  return FairnessSpec(std::move(budgets));
}

FairnessSpec allocate_equal(const std::vector<std::size_t>& group_sizes, std::size_t k) {
  const std::size_t n = std::accumulate(group_sizes.begin(), group_sizes.end(), std::size_t{0});
  const std::size_t l = group_sizes.size();
  if (k > n) {
    std::string deficient;
    const std::size_t share = l == 0 ? 0 : (k + l - 1) / l;
    for (GroupId g = 0; g < l; ++g) {
      if (group_sizes[g] < share) {
        deficient += (deficient.empty() ? "" : ", ") + std::to_string(g);
      }
    }
    throw InfeasibleBudgetError("k = " + std::to_string(k) + " exceeds ground set size " +
                                std::to_string(n) + "; deficient groups: " +
                                (deficient.empty() ? "none" : deficient));
  }
  if (k == 0 || l == 0) return FairnessSpec(std::vector<std::size_t>(l, 0));

  std::vector<std::size_t> budgets(l, k / l);
  const auto order = by_descending_size(group_sizes);
  for (std::size_t i = 0; i < k % l; ++i) ++budgets[order[i]];

  // Clamp to group sizes; move the overflow to the next group with room.
  std::size_t overflow = 0;
  for (GroupId g = 0; g < l; ++g) {
    if (budgets[g] > group_sizes[g]) {
      overflow += budgets[g] - group_sizes[g];
      budgets[g] = group_sizes[g];
    }
  }
  for (GroupId g : order) {
    if (overflow == 0) break;
    const std::size_t room = group_sizes[g] - budgets[g];
    const std::size_t take = std::min(room, overflow);
    budgets[g] += take;
    overflow -= take;
  }
  assert(overflow == 0);
  return FairnessSpec(std::move(budgets));
}

bool is_fair(const std::vector<ItemId>& selection, const GroupMap& groups,
             const FairnessSpec& spec) {
  std::vector<std::size_t> counts(spec.group_total(), 0);
  for (ItemId v : selection) {
    if (v >= groups.size() || groups[v] >= counts.size()) return false;
    ++counts[groups[v]];
  }
  for (GroupId g = 0; g < spec.group_total(); ++g) {
    if (counts[g] != spec.budget(g)) return false;
  }
  return true;
}

std::vector<std::size_t> sizes_for(const GroupMap& groups, const FairnessSpec& spec) {
  const std::size_t l = std::max(spec.group_total(), group_count(groups));
  return group_sizes(groups, l);
}

std::vector<std::size_t> apportion_by_weight(const std::vector<double>& weights,
                                             std::size_t total) {
  const double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  const std::size_t l = weights.size();
  std::vector<std::size_t> parts(l, 0);
  if (total == 0 || l == 0 || weight_sum <= 0.0) return parts;

  std::vector<std::pair<double, GroupId>> remainders;
  std::size_t assigned = 0;
  for (GroupId g = 0; g < l; ++g) {
    const double quota = static_cast<double>(total) * weights[g] / weight_sum;
    parts[g] = static_cast<std::size_t>(std::floor(quota));
    assigned += parts[g];
    remainders.emplace_back(quota - std::floor(quota), g);
  }
  std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) {
    ++parts[remainders[i % l].second];
  }
  return parts;
}

}  // namespace fairstream
