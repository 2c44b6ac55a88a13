#include "fairstream/mp_fsm.hpp"

#include <string>

#include "fairstream/errors.hpp"
#include "fairstream/reservoir.hpp"

namespace fairstream {

MpFsmReport run_mp_fsm(Stream& stream, const ValueOracle& oracle, const GroupMap& groups,
                       const FairnessSpec& spec, const MpFsmConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
    throw ConfigError("epsilon must lie in (0, 1), got " + std::to_string(cfg.epsilon));
  }
  spec.require_feasible(sizes_for(groups, spec));

  const std::uint64_t start_calls = oracle.call_count();
  const std::size_t start_passes = stream.passes();
  const std::size_t k = spec.total();

  CandidateSolution sol(oracle, groups, spec);
  auto reservoirs = make_group_reservoirs(spec, cfg.seed);

  // Pass 1: best singleton (ties to the lower id) plus reservoir sampling.
  // Items of zero-budget groups are ignored outright.
  bool have_max = false;
  ItemId v_max = 0;
  double delta_max = 0.0;
  stream.replay(stream.passes() + 1, [&](const StreamItem& it) {
    if (spec.budget(it.group) == 0) return;
    const double value = oracle.singleton_value(it.item);
    if (!have_max || value > delta_max || (value == delta_max && it.item < v_max)) {
      have_max = true;
      v_max = it.item;
      delta_max = value;
    }
    reservoirs[it.group].offer(it.item);
  });

  if (k > 0 && have_max) sol.add(v_max);

  // Threshold passes skip entirely when every singleton is worthless; any
  // fair set is then optimal and the reservoirs supply one.
  if (delta_max > 0.0 && k > 0) {
    const double floor = (cfg.epsilon / static_cast<double>(k)) * delta_max;
    double tau = (1.0 - cfg.epsilon) * delta_max;
    while (sol.size() < k && tau > floor) {
      stream.replay(stream.passes() + 1, [&](const StreamItem& it) {
        if (sol.full() || spec.budget(it.group) == 0) return;
        if (sol.contains(it.item) || sol.group_full(it.group)) return;
        if (sol.gain(it.item) >= tau) sol.add(it.item);
      });
      tau *= 1.0 - cfg.epsilon;
    }
  }

  // Repair: reservoirs hold k_i uniform items per group, enough to top up
  // every deficient group.
  std::size_t repaired = 0;
  for (GroupId g = 0; g < spec.group_total(); ++g) {
    for (ItemId v : reservoirs[g].sample()) {
      if (sol.group_count(g) >= spec.budget(g)) break;
      if (sol.contains(v)) continue;
      sol.add(v);
      ++repaired;
    }
  }

  return {std::move(sol), stream.passes() - start_passes, oracle.call_count() - start_calls,
          repaired};
}

}  // namespace fairstream
