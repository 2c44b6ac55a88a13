#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <unordered_set>

#include "fairstream/errors.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

class ValueOracle;

/// Objective-specific incremental state of one selection S. Holds the item
/// membership set and the cached utility f(S); concrete oracles attach the
/// structures that make marginal gains cheap (covered-node bitset, best
/// inner-product array, ...). Replaying the same insertions from scratch
/// reproduces identical state.
class OracleState {
 public:
  virtual ~OracleState() = default;

  virtual std::unique_ptr<OracleState> clone() const = 0;

  double utility() const { return utility_; }
  bool contains(ItemId v) const { return selected_.count(v) != 0; }
  std::size_t size() const { return selected_.size(); }

 protected:
  OracleState() = default;
  OracleState(const OracleState&) = default;

  double utility_ = 0.0;

 private:
  friend class ValueOracle;
  std::unordered_set<ItemId> selected_;
};

/// Monotone-submodular value oracle. f(S) and marginal gains are answered
/// against an OracleState; every marginal_gain and singleton_value evaluation
/// bumps the call counter. Oracles are immutable after construction and safe
/// for concurrent queries against distinct states; the counter tolerates
/// concurrent increments.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual std::size_t ground_size() const = 0;

  virtual std::unique_ptr<OracleState> empty_state() const = 0;

  /// f(S ∪ {v}) − f(S). Does not mutate state. One oracle call.
  double marginal_gain(const OracleState& state, ItemId v) const {
    check_item(v);
    calls_.fetch_add(1, std::memory_order_relaxed);
    return gain_impl(state, v);
  }

  /// Applies v to the state; cached utility grows by exactly the marginal
  /// gain. Returns the realized gain. Not an oracle call.
  double commit(OracleState& state, ItemId v) const {
    check_item(v);
    if (state.contains(v)) {
      throw DuplicateItemError("item " + std::to_string(v) + " already selected");
    }
    const double gain = commit_impl(state, v);
    state.selected_.insert(v);
    return gain;
  }

  /// f({v}). One oracle call.
  double singleton_value(ItemId v) const {
    check_item(v);
    calls_.fetch_add(1, std::memory_order_relaxed);
    return singleton_impl(v);
  }

  std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual double gain_impl(const OracleState& state, ItemId v) const = 0;
  virtual double commit_impl(OracleState& state, ItemId v) const = 0;
  virtual double singleton_impl(ItemId v) const = 0;

  void check_item(ItemId v) const {
    if (v >= ground_size()) {
      throw InvalidItemError("item " + std::to_string(v) + " outside ground set of size " +
                             std::to_string(ground_size()));
    }
  }

 private:
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace fairstream
