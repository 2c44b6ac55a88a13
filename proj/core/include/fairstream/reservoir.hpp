#pragma once

#include <cstddef>
#include <vector>

#include "fairstream/fairness.hpp"
#include "fairstream/rng.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

/// Uniform fixed-capacity sample of a stream of unknown length (algorithm R).
/// After m distinct offers every offered item is present with probability
/// min(capacity, m) / m.
class Reservoir {
 public:
  Reservoir(std::size_t capacity, Rng rng) : capacity_(capacity), rng_(rng) {}

  void offer(ItemId v) {
    if (capacity_ == 0) {
      ++seen_;
      return;
    }
    if (seen_ < capacity_) {
      sample_.push_back(v);
    } else {
      const std::uint64_t slot = rng_.bounded(seen_ + 1);
      if (slot < capacity_) sample_[slot] = v;
    }
    ++seen_;
  }

  /// Current sample in slot order.
  const std::vector<ItemId>& sample() const { return sample_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t seen() const { return seen_; }

 private:
  std::size_t capacity_;
  std::size_t seen_ = 0;
  std::vector<ItemId> sample_;
  Rng rng_;
};

/// One reservoir per group, each with an independent RNG stream derived from
/// the shared seed so contents do not depend on how groups interleave.
std::vector<Reservoir> make_group_reservoirs(const FairnessSpec& spec, std::uint64_t seed);

}  // namespace fairstream
