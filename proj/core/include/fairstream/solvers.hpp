#pragma once

#include <cstdint>

#include "fairstream/candidate.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/oracle.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

struct GreedyReport {
  CandidateSolution solution;
  std::size_t rounds;          // = k; each round is one full scan
  std::uint64_t oracle_calls;  // gain evaluations attributable to this run
};

/// Fairness-aware greedy: k rounds, each adding the item with the largest
/// marginal gain among groups still under budget (ties to the lower id).
/// Zero-gain items are still taken when needed to meet the quotas.
GreedyReport run_greedy(const ValueOracle& oracle, const GroupMap& groups,
                        const FairnessSpec& spec);

/// Same selections as run_greedy, usually far fewer gain evaluations: keeps
/// stale gains in a max-heap and refreshes only the top until it stays on top.
GreedyReport run_lazy_greedy(const ValueOracle& oracle, const GroupMap& groups,
                             const FairnessSpec& spec);

/// Exact maximizer over all fair sets by exhaustive enumeration; ties go to
/// the lexicographically smallest sorted id sequence. Refuses instances whose
/// enumeration count exceeds `enumeration_guard`.
CandidateSolution brute_force_opt(const ValueOracle& oracle, const GroupMap& groups,
                                  const FairnessSpec& spec,
                                  std::uint64_t enumeration_guard = 10'000'000);

}  // namespace fairstream
