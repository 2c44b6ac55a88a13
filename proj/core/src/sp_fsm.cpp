#include "fairstream/sp_fsm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "fairstream/errors.hpp"

namespace fairstream {

SpFsmRun::SpFsmRun(const ValueOracle& oracle, GroupMap groups, FairnessSpec spec,
                   const SpFsmConfig& cfg)
    : oracle_(&oracle), groups_(std::move(groups)), spec_(std::move(spec)), cfg_(cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1), got " + std::to_string(cfg.alpha));
  }
  if (!(cfg.beta > 0.0 && cfg.beta < 1.0)) {
    throw ConfigError("beta must lie in (0, 1), got " + std::to_string(cfg.beta));
  }
  if (cfg.buffer_capacity != SpFsmConfig::kUnlimitedBuffer &&
      cfg.buffer_capacity < spec_.total()) {
    throw ConfigError("buffer capacity " + std::to_string(cfg.buffer_capacity) +
                      " is below k = " + std::to_string(spec_.total()) +
                      "; quota protection needs room for k items");
  }
  if (groups_.size() != oracle.ground_size()) {
    throw ConfigError("group map covers " + std::to_string(groups_.size()) +
                      " items but the oracle ground set has " +
                      std::to_string(oracle.ground_size()));
  }
  spec_.require_feasible(sizes_for(groups_, spec_));
  reservoirs_ = make_group_reservoirs(spec_, cfg.seed);
  processed_.assign(groups_.size(), false);
}

void SpFsmRun::refresh_ladder() {
  if (delta_max_ <= 0.0) return;
  const double base = 1.0 + cfg_.alpha;
  const double log_base = std::log(base);
  const double hi = delta_max_;
  const double lo = std::max(delta_max_, lower_bound_) / (2.0 * static_cast<double>(spec_.total()));
  const auto tau_at = [&](int j) { return std::pow(base, j); };

  // Grid exponents from logs, then nudged so the pow comparisons are exact.
  int j_lo = static_cast<int>(std::ceil(std::log(lo) / log_base));
  while (tau_at(j_lo) < lo) ++j_lo;
  while (tau_at(j_lo - 1) >= lo) --j_lo;
  int j_hi = static_cast<int>(std::floor(std::log(hi) / log_base));
  while (tau_at(j_hi) > hi) --j_hi;
  while (tau_at(j_hi + 1) <= hi) ++j_hi;

  for (auto it = ladder_.begin(); it != ladder_.end();) {
    if (it->first < j_lo || it->first > j_hi) {
      it = ladder_.erase(it);  // the candidate's items are gone with it
    } else {
      ++it;
    }
  }
  for (int j = j_lo; j <= j_hi; ++j) {
    if (ladder_.find(j) == ladder_.end()) {
      ladder_.emplace(j, Candidate{tau_at(j), CandidateSolution(*oracle_, groups_, spec_)});
    }
  }
}

void SpFsmRun::process_item(const StreamItem& it) {
  if (it.item >= groups_.size()) {
    throw InvalidItemError("stream item " + std::to_string(it.item) +
                           " outside ground set of size " + std::to_string(groups_.size()));
  }
  if (groups_[it.item] != it.group) {
    throw InvalidItemError("stream item " + std::to_string(it.item) +
                           " arrived tagged with the wrong group");
  }
  if (processed_[it.item]) {
    throw DuplicateProcessingError("item " + std::to_string(it.item) + " arrived twice");
  }
  processed_[it.item] = true;
  ++visited_;
  if (spec_.budget(it.group) == 0) return;

  const double singleton = oracle_->singleton_value(it.item);
  if (singleton > delta_max_) delta_max_ = singleton;
  reservoirs_[it.group].offer(it.item);

  refresh_ladder();
  peak_live_ = std::max(peak_live_, ladder_.size());

  // Admission floor for the buffer; while LB = 0 only strictly positive
  // gains are worth keeping.
  const double admit_floor = cfg_.beta * lower_bound_ / static_cast<double>(spec_.total());
  bool joined = false;
  bool wants_buffer = false;
  for (auto& [j, cand] : ladder_) {
    if (cand.sol.group_full(it.group)) continue;
    const double gain = cand.sol.gain(it.item);
    if (gain >= cand.tau) {
      cand.sol.add(it.item);
      joined = true;
    } else if (gain > 0.0 && gain >= admit_floor) {
      wants_buffer = true;
    }
  }
  // An item held by any candidate is never buffered as well.
  if (!joined && wants_buffer) buffer_.emplace(it.item, it.group);

  if (!ladder_.empty()) {
    double best = 0.0;
    for (const auto& [j, cand] : ladder_) best = std::max(best, cand.sol.utility());
    lower_bound_ = best;
  }

  if (cfg_.buffer_capacity != SpFsmConfig::kUnlimitedBuffer &&
      buffer_.size() > cfg_.buffer_capacity) {
    evict();
  }
  peak_buffer_ = std::max(peak_buffer_, buffer_.size());
}

void SpFsmRun::evict() {
  // Batch-refresh every buffered item's score against the current
  // candidates; the evaluations are deliberately left in the call count.
  struct Scored {
    double delta;
    ItemId item;
    GroupId group;
  };
  std::vector<Scored> scored;
  scored.reserve(buffer_.size());
  for (const auto& [v, g] : buffer_) {
    double delta = 0.0;
    for (const auto& [j, cand] : ladder_) delta = std::max(delta, cand.sol.gain(v));
    scored.push_back({delta, v, g});
  }

  // Items whose best gain fell below the admission floor are dead weight.
  const double drop_floor = cfg_.beta * lower_bound_ / static_cast<double>(spec_.total());
  std::erase_if(scored, [&](const Scored& s) {
    if (s.delta < drop_floor) {
      buffer_.erase(s.item);
      return true;
    }
    return false;
  });

  // Weakest items go first, but a group holding no more than its quota keeps
  // everything it has; counts only shrink, so one sorted sweep suffices.
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    return a.delta != b.delta ? a.delta < b.delta : a.item < b.item;
  });
  std::vector<std::size_t> held(spec_.group_total(), 0);
  for (const Scored& s : scored) ++held[s.group];
  for (const Scored& s : scored) {
    if (buffer_.size() <= cfg_.buffer_capacity) break;
    if (held[s.group] <= spec_.budget(s.group)) continue;
    buffer_.erase(s.item);
    --held[s.group];
  }
  assert(buffer_.size() <= cfg_.buffer_capacity);
}

void SpFsmRun::complete(CandidateSolution& sol, const std::vector<ItemId>& pool) const {
  while (sol.size() < spec_.total()) {
    double best_gain = -1.0;
    ItemId best = 0;
    bool any = false;
    for (ItemId v : pool) {
      if (sol.contains(v) || sol.group_full(groups_[v])) continue;
      const double g = sol.gain(v);
      if (g > best_gain) {
        best_gain = g;
        best = v;
        any = true;
      }
    }
    if (!any) break;  // mid-stream snapshots may fall short of k
    sol.add(best);
  }
}

CandidateSolution SpFsmRun::post_process() const {
  std::vector<ItemId> pool;
  for (const auto& [v, g] : buffer_) pool.push_back(v);
  for (const Reservoir& r : reservoirs_) {
    pool.insert(pool.end(), r.sample().begin(), r.sample().end());
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  if (ladder_.empty()) {
    CandidateSolution sol(*oracle_, groups_, spec_);
    complete(sol, pool);
    return sol;
  }

  // tau' is the smallest threshold whose candidate leaves every budgeted
  // group strictly under quota; if none does, the largest threshold.
  const auto under_quota_everywhere = [&](const CandidateSolution& s) {
    for (GroupId g = 0; g < spec_.group_total(); ++g) {
      if (spec_.budget(g) > 0 && s.group_count(g) >= spec_.budget(g)) return false;
    }
    return true;
  };
  int j_prime = ladder_.rbegin()->first;
  for (const auto& [j, cand] : ladder_) {
    if (under_quota_everywhere(cand.sol)) {
      j_prime = j;
      break;
    }
  }

  std::optional<CandidateSolution> best;
  for (const auto& [j, cand] : ladder_) {
    if (j > j_prime) break;
    CandidateSolution completed = cand.sol;
    complete(completed, pool);
    if (!best || completed.utility() > best->utility()) best = std::move(completed);
  }
  return std::move(*best);
}

std::vector<double> SpFsmRun::live_thresholds() const {
  std::vector<double> taus;
  taus.reserve(ladder_.size());
  for (const auto& [j, cand] : ladder_) taus.push_back(cand.tau);
  return taus;
}

std::vector<const CandidateSolution*> SpFsmRun::live_solutions() const {
  std::vector<const CandidateSolution*> sols;
  sols.reserve(ladder_.size());
  for (const auto& [j, cand] : ladder_) sols.push_back(&cand.sol);
  return sols;
}

std::vector<ItemId> SpFsmRun::buffered_items() const {
  std::vector<ItemId> items;
  items.reserve(buffer_.size());
  for (const auto& [v, g] : buffer_) items.push_back(v);
  return items;
}

std::size_t SpFsmRun::audit_violations() const {
  std::size_t violations = 0;
  for (const auto& [j, cand] : ladder_) {
    for (const CandidateSolution::AuditEntry& e : cand.sol.audit()) {
      if (e.gain < cand.tau) ++violations;
    }
  }
  return violations;
}

SpFsmReport run_sp_fsm(Stream& stream, const ValueOracle& oracle, const GroupMap& groups,
                       const FairnessSpec& spec, const SpFsmConfig& cfg) {
  const std::uint64_t start_calls = oracle.call_count();
  SpFsmRun run(oracle, groups, spec, cfg);
  stream.replay(stream.passes() + 1, [&](const StreamItem& it) { run.process_item(it); });
  const std::size_t violations = run.audit_violations();
  CandidateSolution sol = run.post_process();
  return {std::move(sol),        oracle.call_count() - start_calls, run.peak_buffer(),
          run.peak_live_candidates(), run.items_visited(),          violations};
}

}  // namespace fairstream
