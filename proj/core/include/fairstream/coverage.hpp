#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fairstream/oracle.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

/// Immutable directed graph over dense node ids, stored in CSR form.
/// N(v) is the out-neighbor set; a node covers itself only through an
/// explicit self-loop edge.
class CoverageGroundSet {
 public:
  /// Builds from an edge list over ids < n. Duplicate edges collapse.
  CoverageGroundSet(std::size_t n, std::vector<std::pair<ItemId, ItemId>> edges);

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size(); }

  std::span<const ItemId> neighbors(ItemId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::size_t out_degree(ItemId v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<ItemId> neighbors_;
};

/// Maximum-coverage objective f(S) = |⋃_{v∈S} N(v)|.
class CoverageOracle final : public ValueOracle {
 public:
  explicit CoverageOracle(const CoverageGroundSet& graph) : graph_(graph) {}

  std::size_t ground_size() const override { return graph_.node_count(); }
  std::unique_ptr<OracleState> empty_state() const override;

  const CoverageGroundSet& graph() const { return graph_; }

 protected:
  double gain_impl(const OracleState& state, ItemId v) const override;
  double commit_impl(OracleState& state, ItemId v) const override;
  double singleton_impl(ItemId v) const override;

 private:
  struct State;
  const CoverageGroundSet& graph_;
};

}  // namespace fairstream
