#include "fairstream/stream.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fairstream {

void Stream::replay(std::size_t pass_index, const Visitor& visit) {
  if (pass_index != passes_ + 1) {
    throw ConfigError("passes must be requested in order; expected pass " +
                      std::to_string(passes_ + 1) + ", got " + std::to_string(pass_index));
  }
  if (pass_index > 1 && !replayable()) {
    throw ReplayUnsupportedError("stream cannot rewind for pass " + std::to_string(pass_index));
  }
  emit(visit);
  ++passes_;
}

void MaterializedStream::emit(const Visitor& visit) {
  for (const StreamItem& it : items_) visit(it);
}

void ForwardOnlyStream::emit(const Visitor& visit) {
  for (const StreamItem& it : items_) visit(it);
}

std::vector<StreamItem> natural_order(const GroupMap& groups) {
  std::vector<StreamItem> items;
  items.reserve(groups.size());
  for (ItemId v = 0; v < groups.size(); ++v) items.push_back({v, groups[v]});
  return items;
}

std::vector<StreamItem> shuffled_order(const GroupMap& groups, std::uint64_t seed) {
  auto items = natural_order(groups);
  Rng rng(seed);
  rng.shuffle(items);
  return items;
}

std::vector<StreamItem> adversarial_order(const GroupMap& groups, const ValueOracle& oracle) {
  auto items = natural_order(groups);
  std::vector<double> value(items.size());
  for (const StreamItem& it : items) value[it.item] = oracle.singleton_value(it.item);
  std::stable_sort(items.begin(), items.end(), [&](const StreamItem& a, const StreamItem& b) {
    return value[a.item] < value[b.item];
  });
  return items;
}

}  // namespace fairstream
