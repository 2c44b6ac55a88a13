#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fairstream/data_io.hpp"
#include "fairstream/errors.hpp"

using namespace fairstream;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fairstream_io_tests" / name;
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const fs::path& dir, const std::string& name, const std::string& body) {
  const fs::path p = dir / name;
  std::ofstream out(p);
  out << body;
  REQUIRE(out.good());
  return p.string();
}

std::vector<ItemId> sorted_neighbors(const CoverageGroundSet& g, ItemId v) {
  auto span = g.neighbors(v);
  std::vector<ItemId> out(span.begin(), span.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("data_io") {

TEST_CASE("edge and group files load with densified ids") {
  const auto dir = scratch_dir("load_ok");
  const auto edges = write_file(dir, "edges.txt",
                                "# friend graph\n"
                                "10 20\n"
                                "20 10\n"
                                "10 30\n"
                                "10 30\n"
                                "\n"
                                "30 10\n");
  const auto groups = write_file(dir, "groups.txt",
                                 "10 0\n"
                                 "20 1\n"
                                 "30 1\n");

  const auto inst = load_coverage_instance(edges, groups);
  CHECK(inst.graph.node_count() == 3);
  CHECK(inst.original_ids == std::vector<std::uint64_t>{10, 20, 30});
  CHECK(inst.groups == GroupMap{0, 1, 1});
  CHECK(sorted_neighbors(inst.graph, 0) == std::vector<ItemId>{1, 2});  // duplicate collapsed
  CHECK(sorted_neighbors(inst.graph, 1) == std::vector<ItemId>{0});
  CHECK(sorted_neighbors(inst.graph, 2) == std::vector<ItemId>{0});
  CHECK(inst.graph.edge_count() == 4);
}

TEST_CASE("nodes listed only in the group file become isolated nodes") {
  const auto dir = scratch_dir("isolated");
  const auto edges = write_file(dir, "edges.txt", "1 2\n");
  const auto groups = write_file(dir, "groups.txt", "1 0\n2 0\n9 1\n");

  const auto inst = load_coverage_instance(edges, groups);
  CHECK(inst.graph.node_count() == 3);
  CHECK(inst.original_ids == std::vector<std::uint64_t>{1, 2, 9});
  CHECK(inst.graph.neighbors(2).empty());
}

TEST_CASE("coverage loader rejects broken inputs with their location") {
  const auto dir = scratch_dir("load_bad");
  const auto groups = write_file(dir, "groups.txt", "1 0\n2 0\n");

  const auto bad_arity = write_file(dir, "arity.txt", "1 2\n# fine\n1 2 3\n");
  CHECK_THROWS_WITH_AS(load_coverage_instance(bad_arity, groups),
                       doctest::Contains("arity.txt:3"), LoadError);

  const auto bad_token = write_file(dir, "token.txt", "1 two\n");
  CHECK_THROWS_WITH_AS(load_coverage_instance(bad_token, groups),
                       doctest::Contains("nonnegative integer"), LoadError);

  const auto ok_edges = write_file(dir, "edges.txt", "1 2\n");
  const auto missing = write_file(dir, "missing.txt", "1 0\n");
  CHECK_THROWS_WITH_AS(load_coverage_instance(ok_edges, missing),
                       doctest::Contains("node 2 has no group line"), LoadError);

  const auto twice = write_file(dir, "twice.txt", "1 0\n1 1\n2 0\n");
  CHECK_THROWS_WITH_AS(load_coverage_instance(ok_edges, twice),
                       doctest::Contains("more than one group line"), LoadError);

  const auto empty = write_file(dir, "empty.txt", "# nothing\n");
  CHECK_THROWS_WITH_AS(load_coverage_instance(empty, empty), doctest::Contains("empty graph"),
                       LoadError);

  CHECK_THROWS_WITH_AS(load_coverage_instance((dir / "absent.txt").string(), groups),
                       doctest::Contains("cannot open"), LoadError);
}

TEST_CASE("feature files load items, user vector and groups") {
  const auto dir = scratch_dir("rec_ok");
  const auto feats = write_file(dir, "features.txt",
                                "# catalog\n"
                                "2 2\n"
                                "1 0.5 0\n"
                                "0 1 2\n"
                                "user 1 1\n");
  const auto groups = write_file(dir, "groups.txt", "0 0\n1 1\n");

  const auto inst = load_rec_instance(feats, groups, 0.75);
  CHECK(inst.ground.item_count() == 2);
  CHECK(inst.ground.lambda() == 0.75);
  CHECK(inst.groups == GroupMap{0, 1});
  const auto item0 = inst.ground.item(0);
  CHECK(item0[0] == 1.0);
  CHECK(item0[1] == 2.0);
  const auto user = inst.ground.user();
  CHECK(user[0] == 1.0);
  CHECK(user[1] == 1.0);
}

TEST_CASE("feature loader rejects broken inputs") {
  const auto dir = scratch_dir("rec_bad");
  const auto groups = write_file(dir, "groups.txt", "0 0\n1 0\n");

  const auto negative = write_file(dir, "neg.txt", "2 1\n0 1\n1 -2\nuser 1\n");
  CHECK_THROWS_WITH_AS(load_rec_instance(negative, groups, 0.75),
                       doctest::Contains("negative feature"), LoadError);

  const auto arity = write_file(dir, "arity.txt", "2 2\n0 1 2\n1 3\nuser 1 1\n");
  CHECK_THROWS_WITH_AS(load_rec_instance(arity, groups, 0.75), doctest::Contains("arity.txt:3"),
                       LoadError);

  const auto dup = write_file(dir, "dup.txt", "2 1\n0 1\n0 2\nuser 1\n");
  CHECK_THROWS_WITH_AS(load_rec_instance(dup, groups, 0.75), doctest::Contains("duplicate row"),
                       LoadError);

  const auto range = write_file(dir, "range.txt", "2 1\n0 1\n5 2\nuser 1\n");
  CHECK_THROWS_WITH_AS(load_rec_instance(range, groups, 0.75), doctest::Contains("not in [0, n)"),
                       LoadError);

  const auto no_user = write_file(dir, "nouser.txt", "2 1\n0 1\n1 2\n");
  CHECK_THROWS_WITH_AS(load_rec_instance(no_user, groups, 0.75),
                       doctest::Contains("missing 'user"), LoadError);

  const auto trailing = write_file(dir, "trailing.txt", "2 1\n0 1\n1 2\nuser 1\n3 4\n");
  CHECK_THROWS_WITH_AS(load_rec_instance(trailing, groups, 0.75),
                       doctest::Contains("unexpected content"), LoadError);

  const auto feats = write_file(dir, "ok.txt", "2 1\n0 1\n1 2\nuser 1\n");
  const auto unknown = write_file(dir, "unknown.txt", "0 0\n1 0\n7 0\n");
  CHECK_THROWS_WITH_AS(load_rec_instance(feats, unknown, 0.75),
                       doctest::Contains("unknown node 7"), LoadError);
}

TEST_CASE("generated graphs have n nodes, n edges and a heavy tail") {
  const auto edges = gen_ba_edges(100, 7);
  CHECK(edges.size() == 100);
  std::set<std::pair<ItemId, ItemId>> undirected;
  for (const auto& [a, b] : edges) {
    CHECK(a != b);
    CHECK(a < 100);
    CHECK(b < 100);
    undirected.emplace(std::min(a, b), std::max(a, b));
  }
  CHECK(undirected.size() == 100);  // no duplicate edges

  const auto graph = gen_ba(100, 7);
  CHECK(graph.node_count() == 100);
  CHECK(graph.edge_count() == 200);  // every edge stored as two arcs

  std::size_t max_degree = 0;
  for (ItemId v = 0; v < 100; ++v) {
    max_degree = std::max(max_degree, graph.neighbors(v).size());
    for (ItemId u : graph.neighbors(v)) {
      const auto nu = sorted_neighbors(graph, u);
      CHECK(std::binary_search(nu.begin(), nu.end(), v));
    }
  }
  // Preferential attachment concentrates degree well above the mean of 4.
  CHECK(max_degree > 4);

  CHECK(gen_ba_edges(100, 7) == edges);
  CHECK(gen_ba_edges(100, 8) != edges);
}

TEST_CASE("tiny generated graphs still meet the edge budget") {
  const auto edges = gen_ba_edges(3, 1);
  CHECK(edges.size() == 3);
  std::set<std::pair<ItemId, ItemId>> undirected;
  for (const auto& [a, b] : edges) undirected.emplace(std::min(a, b), std::max(a, b));
  CHECK(undirected.size() == 3);  // the triangle is the only option
  CHECK_THROWS_AS(gen_ba_edges(2, 1), ConfigError);
}

TEST_CASE("zipf group sizes follow the power law") {
  const auto groups = zipf_groups(14, 3, 2.0, 42);
  CHECK(groups.size() == 14);
  CHECK(group_sizes(groups, 3) == std::vector<std::size_t>{10, 3, 1});
  CHECK(zipf_groups(14, 3, 2.0, 42) == groups);

  // A steep exponent rounds the small groups to zero; they are revived at
  // the expense of the largest.
  CHECK(group_sizes(zipf_groups(10, 3, 5.0, 1), 3) == std::vector<std::size_t>{8, 1, 1});

  CHECK(group_sizes(zipf_groups(5, 5, 1.0, 1), 5) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(group_sizes(zipf_groups(10, 1, 2.0, 1), 1) == std::vector<std::size_t>{10});

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto sizes = group_sizes(zipf_groups(50, 4, 1.5, seed), 4);
    CHECK(std::is_sorted(sizes.rbegin(), sizes.rend()));
    CHECK(std::count(sizes.begin(), sizes.end(), 0) == 0);
  }
}

TEST_CASE("degenerate zipf parameters are rejected") {
  CHECK_THROWS_AS(zipf_groups(2, 3, 2.0, 1), DegeneratePartitionError);
  CHECK_THROWS_AS(zipf_groups(10, 3, 0.0, 1), ConfigError);
  CHECK_THROWS_AS(zipf_groups(10, 3, -1.0, 1), ConfigError);
  CHECK_THROWS_AS(zipf_groups(10, 0, 2.0, 1), ConfigError);
}

TEST_CASE("written instances load back unchanged") {
  const auto dir = scratch_dir("round_trip");
  const auto graph = gen_ba(30, 5);
  const auto groups = zipf_groups(30, 4, 1.5, 5);
  const auto edge_path = (dir / "edges.txt").string();
  const auto group_path = (dir / "groups.txt").string();
  write_edge_list(edge_path, graph);
  write_group_map(group_path, groups);

  const auto inst = load_coverage_instance(edge_path, group_path);
  CHECK(inst.graph.node_count() == graph.node_count());
  CHECK(inst.graph.edge_count() == graph.edge_count());
  CHECK(inst.groups == groups);
  for (ItemId v = 0; v < graph.node_count(); ++v) {
    CHECK(inst.original_ids[v] == v);
    CHECK(sorted_neighbors(inst.graph, v) == sorted_neighbors(graph, v));
  }
}

}  // TEST_SUITE
