#pragma once

#include <cstdint>

#include "fairstream/candidate.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/oracle.hpp"
#include "fairstream/stream.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

struct ExchangeConfig {
  double subsample = 1.0;  // fraction of the stream the swap logic sees, in (0, 1]
  std::uint64_t seed = 0;  // reservoir and subsampling RNG
};

struct ExchangeReport {
  CandidateSolution solution;
  std::uint64_t oracle_calls;
  std::size_t swaps;
  std::size_t repaired_items;
};

/// Single-pass local-search baseline. Items are accepted while their group
/// has room, remembering the gain each realized; once a group is full, a
/// newcomer replaces the group's weakest member only when its gain over the
/// reduced selection is at least twice that member's stored weight.
/// Per-group reservoirs see the whole stream and top up any group left
/// deficient, so the output is always fair. With subsample < 1 the swap
/// logic only sees a random fraction of the items.
ExchangeReport run_exchange(Stream& stream, const ValueOracle& oracle, const GroupMap& groups,
                            const FairnessSpec& spec, const ExchangeConfig& cfg);

}  // namespace fairstream
