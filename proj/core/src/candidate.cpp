#include "fairstream/candidate.hpp"

#include <string>
#include <utility>

#include "fairstream/errors.hpp"

namespace fairstream {

CandidateSolution::CandidateSolution(const ValueOracle& oracle, GroupMap groups,
                                     FairnessSpec spec)
    : oracle_(&oracle),
      groups_(std::move(groups)),
      spec_(std::move(spec)),
      state_(oracle.empty_state()),
      counts_(spec_.group_total(), 0) {
  if (groups_.size() != oracle.ground_size()) {
    throw ConfigError("group map covers " + std::to_string(groups_.size()) +
                      " items but the oracle ground set has " +
                      std::to_string(oracle.ground_size()));
  }
}

CandidateSolution::CandidateSolution(const CandidateSolution& other)
    : oracle_(other.oracle_),
      groups_(other.groups_),
      spec_(other.spec_),
      state_(other.state_->clone()),
      selection_(other.selection_),
      counts_(other.counts_),
      audit_(other.audit_) {}

CandidateSolution& CandidateSolution::operator=(const CandidateSolution& other) {
  if (this != &other) {
    oracle_ = other.oracle_;
    groups_ = other.groups_;
    spec_ = other.spec_;
    state_ = other.state_->clone();
    selection_ = other.selection_;
    counts_ = other.counts_;
    audit_ = other.audit_;
  }
  return *this;
}

double CandidateSolution::add(ItemId v) {
  if (v >= groups_.size()) {
    throw InvalidItemError("item " + std::to_string(v) + " outside ground set of size " +
                           std::to_string(groups_.size()));
  }
  const GroupId g = groups_[v];
  if (group_full(g)) {
    throw InfeasibleBudgetError("group " + std::to_string(g) + " is already at its budget of " +
                                std::to_string(spec_.budget(g)));
  }
  const double realized = oracle_->commit(*state_, v);
  selection_.push_back(v);
  ++counts_[g];
  audit_.push_back({v, realized});
  return realized;
}

}  // namespace fairstream
