#pragma once

#include <cstdint>
#include <vector>

namespace fairstream {

/// Dense item identifier in [0, n).
using ItemId = std::uint32_t;

/// Dense group identifier in [0, l).
using GroupId = std::uint32_t;

/// Maps every item to the group it belongs to; index = ItemId.
using GroupMap = std::vector<GroupId>;

/// One element of a stream: an item together with its group label.
struct StreamItem {
  ItemId item;
  GroupId group;

  friend bool operator==(const StreamItem&, const StreamItem&) = default;
};

/// Number of groups implied by a group map (max id + 1; 0 when empty).
inline std::size_t group_count(const GroupMap& groups) {
  std::size_t l = 0;
  for (GroupId g : groups) l = std::max<std::size_t>(l, g + 1);
  return l;
}

/// Per-group item counts n_i.
inline std::vector<std::size_t> group_sizes(const GroupMap& groups, std::size_t l) {
  std::vector<std::size_t> sizes(l, 0);
  for (GroupId g : groups) ++sizes[g];
  return sizes;
}

}  // namespace fairstream
