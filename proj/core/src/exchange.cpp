#include "fairstream/exchange.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fairstream/errors.hpp"
#include "fairstream/reservoir.hpp"

namespace fairstream {

namespace {

/// Members of one group's working set with their acceptance weights.
struct Held {
  ItemId item;
  double weight;
};

}  // namespace

ExchangeReport run_exchange(Stream& stream, const ValueOracle& oracle, const GroupMap& groups,
                            const FairnessSpec& spec, const ExchangeConfig& cfg) {
  if (!(cfg.subsample > 0.0 && cfg.subsample <= 1.0)) {
    throw ConfigError("subsample must lie in (0, 1], got " + std::to_string(cfg.subsample));
  }
  spec.require_feasible(sizes_for(groups, spec));

  const std::uint64_t start_calls = oracle.call_count();
  auto reservoirs = make_group_reservoirs(spec, cfg.seed);
  Rng sampler = Rng(cfg.seed).derive(spec.group_total());  // distinct from reservoir streams

  std::vector<std::vector<Held>> held(spec.group_total());
  auto state = oracle.empty_state();
  std::size_t swaps = 0;

  // Rebuilds the working state from the held sets, optionally swapping
  // `out` for nothing first; returns the fresh state.
  const auto rebuild_without = [&](GroupId g, ItemId out) {
    auto fresh = oracle.empty_state();
    for (GroupId gg = 0; gg < spec.group_total(); ++gg) {
      for (const Held& h : held[gg]) {
        if (gg == g && h.item == out) continue;
        oracle.commit(*fresh, h.item);
      }
    }
    return fresh;
  };

  stream.replay(stream.passes() + 1, [&](const StreamItem& it) {
    if (spec.budget(it.group) == 0) return;
    reservoirs[it.group].offer(it.item);
    if (cfg.subsample < 1.0 && sampler.unit_real() >= cfg.subsample) return;

    std::vector<Held>& members = held[it.group];
    if (members.size() < spec.budget(it.group)) {
      const double w = oracle.marginal_gain(*state, it.item);
      oracle.commit(*state, it.item);
      members.push_back({it.item, w});
      return;
    }

    // Group is full: challenge its weakest member.
    std::size_t weakest = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
      const bool lighter = members[i].weight < members[weakest].weight ||
                           (members[i].weight == members[weakest].weight &&
                            members[i].item < members[weakest].item);
      if (lighter) weakest = i;
    }
    auto reduced = rebuild_without(it.group, members[weakest].item);
    const double challenger_gain = oracle.marginal_gain(*reduced, it.item);
    if (challenger_gain >= 2.0 * members[weakest].weight) {
      oracle.commit(*reduced, it.item);
      state = std::move(reduced);
      members[weakest] = {it.item, challenger_gain};
      ++swaps;
    }
  });

  // Repair: reservoirs saw every item, so deficient groups can be topped up.
  std::size_t repaired = 0;
  CandidateSolution sol(oracle, groups, spec);
  for (GroupId g = 0; g < spec.group_total(); ++g) {
    std::vector<ItemId> chosen;
    for (const Held& h : held[g]) chosen.push_back(h.item);
    std::sort(chosen.begin(), chosen.end());
    for (ItemId v : chosen) sol.add(v);
  }
  for (GroupId g = 0; g < spec.group_total(); ++g) {
    for (ItemId v : reservoirs[g].sample()) {
      if (sol.group_count(g) >= spec.budget(g)) break;
      if (sol.contains(v)) continue;
      sol.add(v);
      ++repaired;
    }
  }

  return {std::move(sol), oracle.call_count() - start_calls, swaps, repaired};
}

}  // namespace fairstream
