#pragma once

#include <cstddef>
#include <vector>

#include "fairstream/errors.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

/// The partition constraint: per-group budgets k_1..k_l with total k.
/// A feasible solution holds exactly k_i items of group i; groups with
/// k_i = 0 are ignored by every algorithm.
class FairnessSpec {
 public:
  explicit FairnessSpec(std::vector<std::size_t> budgets);

  std::size_t group_total() const { return budgets_.size(); }  // l
  std::size_t budget(GroupId g) const { return g < budgets_.size() ? budgets_[g] : 0; }
  std::size_t total() const { return total_; }  // k
  const std::vector<std::size_t>& budgets() const { return budgets_; }

  /// Throws InfeasibleBudgetError unless k_i <= n_i for every group.
  void require_feasible(const std::vector<std::size_t>& sizes) const;

 private:
  std::vector<std::size_t> budgets_;
  std::size_t total_;
};

/// Proportional representation: k_i = (n_i/n)·k, rounded by largest-remainder
/// apportionment (ties to the lower group id). Budgets sum to exactly k and
/// never exceed group sizes. Throws InfeasibleBudgetError when k > n.
FairnessSpec allocate_proportional(const std::vector<std::size_t>& group_sizes, std::size_t k);

/// Equal representation: floor(k/l) each; the k mod l remainder seats go to
/// groups in descending size order (ties to the lower id); budgets above a
/// group's size are clamped and the overflow moves to the next group with
/// spare room, in the same order. Throws InfeasibleBudgetError when k > n.
FairnessSpec allocate_equal(const std::vector<std::size_t>& group_sizes, std::size_t k);

/// True iff |S ∩ V_i| = k_i for every group with k_i > 0 and no item of a
/// zero-budget group is selected.
bool is_fair(const std::vector<ItemId>& selection, const GroupMap& groups,
             const FairnessSpec& spec);

/// Shared largest-remainder machinery for real-valued weights: splits `total`
/// into parts proportional to the weights, ties broken by lower index.
std::vector<std::size_t> apportion_by_weight(const std::vector<double>& weights,
                                             std::size_t total);

/// Group sizes from the map, padded out to the spec's group count.
std::vector<std::size_t> sizes_for(const GroupMap& groups, const FairnessSpec& spec);

}  // namespace fairstream
