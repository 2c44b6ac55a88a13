#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fairstream/fairness.hpp"
#include "fairstream/oracle.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

/// A partial selection under construction: the chosen items in acceptance
/// order, per-group counters against the budgets, and the oracle state that
/// makes marginal gains incremental. Copying clones the oracle state, so
/// threshold algorithms can grow many candidates side by side. The group map
/// and budgets are stored by value; only the oracle must outlive the solution,
/// and then only for further gain() or add() calls.
class CandidateSolution {
 public:
  /// One accepted item together with the gain it realized at acceptance.
  struct AuditEntry {
    ItemId item;
    double gain;
  };

  CandidateSolution(const ValueOracle& oracle, GroupMap groups, FairnessSpec spec);

  CandidateSolution(const CandidateSolution& other);
  CandidateSolution& operator=(const CandidateSolution& other);
  CandidateSolution(CandidateSolution&&) noexcept = default;
  CandidateSolution& operator=(CandidateSolution&&) noexcept = default;

  /// Marginal gain of v against the current selection (counted oracle call).
  double gain(ItemId v) const { return oracle_->marginal_gain(*state_, v); }

  /// Accepts v, returning the realized gain. Rejects duplicates and items
  /// whose group is already at budget.
  double add(ItemId v);

  bool contains(ItemId v) const { return state_->contains(v); }
  bool group_full(GroupId g) const {
    return g >= counts_.size() || counts_[g] >= spec_.budget(g);
  }
  bool full() const { return selection_.size() >= spec_.total(); }
  bool fair() const { return is_fair(selection_, groups_, spec_); }

  std::size_t size() const { return selection_.size(); }
  std::size_t group_count(GroupId g) const { return g < counts_.size() ? counts_[g] : 0; }
  double utility() const { return state_->utility(); }

  const std::vector<ItemId>& selection() const { return selection_; }
  const std::vector<AuditEntry>& audit() const { return audit_; }
  const FairnessSpec& spec() const { return spec_; }
  const GroupMap& groups() const { return groups_; }
  const ValueOracle& oracle() const { return *oracle_; }

 private:
  const ValueOracle* oracle_;
  GroupMap groups_;
  FairnessSpec spec_;
  std::unique_ptr<OracleState> state_;
  std::vector<ItemId> selection_;
  std::vector<std::size_t> counts_;
  std::vector<AuditEntry> audit_;
};

}  // namespace fairstream
