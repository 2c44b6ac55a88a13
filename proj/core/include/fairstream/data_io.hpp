#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fairstream/coverage.hpp"
#include "fairstream/recommendation.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

/// Coverage dataset: dense graph, group map, and the original node ids in
/// dense order (dense id i came from original_ids[i]).
struct CoverageInstance {
  CoverageGroundSet graph;
  GroupMap groups;
  std::vector<std::uint64_t> original_ids;
};

/// Recommendation dataset: feature vectors plus the group map.
struct RecInstance {
  RecGroundSet ground;
  GroupMap groups;
};

/// Edge file: "src dst" per line, '#' comments allowed. Group file: one
/// "node group" line per node. Node ids are densified over the union of
/// both files in ascending original-id order; duplicate edges collapse.
/// Malformed lines, nodes without a group, and empty graphs are rejected
/// with the offending location.
CoverageInstance load_coverage_instance(const std::string& edge_path,
                                        const std::string& group_path);

/// Feature file: header "n d", then n lines "item_id f_1 .. f_d" covering
/// ids 0..n-1 exactly once, then one line "user u_1 .. u_d". All entries
/// must be nonnegative; lambda comes from the caller's configuration.
RecInstance load_rec_instance(const std::string& feature_path, const std::string& group_path,
                              double lambda);

/// Preferential-attachment graph with exactly n nodes and n undirected
/// edges: a 2-node seed, one edge per arriving node, then extra preferential
/// edges to close the gap. Deterministic under seed; requires n >= 3.
std::vector<std::pair<ItemId, ItemId>> gen_ba_edges(std::size_t n, std::uint64_t seed);

/// The same graph as a symmetric ground set (each undirected edge becomes
/// two arcs).
CoverageGroundSet gen_ba(std::size_t n, std::uint64_t seed);

/// Group sizes proportional to rank^(-s) (largest-remainder rounding, every
/// group nonempty), assigned to nodes by a seeded uniform shuffle.
GroupMap zipf_groups(std::size_t n, std::size_t l, double s, std::uint64_t seed);

/// Writes every arc as one "src dst" line, so a symmetric graph round-trips
/// to an identical adjacency structure.
void write_edge_list(const std::string& path, const CoverageGroundSet& graph);

void write_group_map(const std::string& path, const GroupMap& groups);

}  // namespace fairstream
