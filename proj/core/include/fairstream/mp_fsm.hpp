#pragma once

#include <cstdint>

#include "fairstream/candidate.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/oracle.hpp"
#include "fairstream/stream.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

struct MpFsmConfig {
  double epsilon = 0.2;   // threshold decay, must lie in (0, 1)
  std::uint64_t seed = 0; // reservoir RNG seed
};

struct MpFsmReport {
  CandidateSolution solution;
  std::size_t passes;
  std::uint64_t oracle_calls;
  std::size_t repaired_items;  // items supplied by reservoirs after the passes
};

/// Multi-pass descending-threshold selection. Pass 1 finds the best singleton
/// and fills one reservoir per group; later passes accept any item whose gain
/// meets the current threshold, which decays by (1-epsilon) per pass until
/// the solution is full or the threshold falls to (epsilon/k) times the best
/// singleton value. Reservoirs then top up any group still under budget, so
/// the result is always fair.
MpFsmReport run_mp_fsm(Stream& stream, const ValueOracle& oracle, const GroupMap& groups,
                       const FairnessSpec& spec, const MpFsmConfig& cfg);

}  // namespace fairstream
