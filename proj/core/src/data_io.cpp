#include "fairstream/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "fairstream/errors.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/rng.hpp"

namespace fairstream {

namespace {

/// Line-oriented reader that skips blanks and '#' comments and remembers
/// where it is for error messages.
class LineReader {
 public:
  explicit LineReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw LoadError("cannot open " + path);
  }

  bool next() {
    while (std::getline(in_, line_)) {
      ++number_;
      const auto first = line_.find_first_not_of(" \t\r");
      if (first == std::string::npos || line_[first] == '#') continue;
      return true;
    }
    return false;
  }

  const std::string& line() const { return line_; }
  std::string where() const { return path_ + ":" + std::to_string(number_); }

 private:
  std::string path_;
  std::ifstream in_;
  std::string line_;
  std::size_t number_ = 0;
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_u64(const std::string& tok, const std::string& where) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw LoadError(where + ": expected a nonnegative integer, got '" + tok + "'");
  }
  return value;
}

double parse_real(const std::string& tok, const std::string& where) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw LoadError(where + ": expected a number, got '" + tok + "'");
  }
  return value;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> read_id_pairs(const std::string& path,
                                                                   const char* what) {
  LineReader reader(path);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  while (reader.next()) {
    const auto toks = tokens_of(reader.line());
    if (toks.size() != 2) {
      throw LoadError(reader.where() + ": expected '" + what + "', got '" + reader.line() + "'");
    }
    pairs.emplace_back(parse_u64(toks[0], reader.where()), parse_u64(toks[1], reader.where()));
  }
  return pairs;
}

GroupMap groups_from_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                           const std::vector<std::uint64_t>& universe, const std::string& path) {
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> assigned(universe.size(), kUnset);
  for (const auto& [node, group] : pairs) {
    const auto it = std::lower_bound(universe.begin(), universe.end(), node);
    if (it == universe.end() || *it != node) {
      throw LoadError(path + ": group line names unknown node " + std::to_string(node));
    }
    const std::size_t dense = static_cast<std::size_t>(it - universe.begin());
    if (assigned[dense] != kUnset) {
      throw LoadError(path + ": node " + std::to_string(node) + " has more than one group line");
    }
    if (group > 0xffffffffULL) {
      throw LoadError(path + ": group id " + std::to_string(group) + " out of range");
    }
    assigned[dense] = group;
  }
  GroupMap groups(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (assigned[i] == kUnset) {
      throw LoadError(path + ": node " + std::to_string(universe[i]) + " has no group line");
    }
    groups[i] = static_cast<GroupId>(assigned[i]);
  }
  return groups;
}

}  // namespace

CoverageInstance load_coverage_instance(const std::string& edge_path,
                                        const std::string& group_path) {
  const auto raw_edges = read_id_pairs(edge_path, "src dst");
  const auto raw_groups = read_id_pairs(group_path, "node group");

  std::vector<std::uint64_t> universe;
  universe.reserve(raw_edges.size() * 2 + raw_groups.size());
  for (const auto& [a, b] : raw_edges) {
    universe.push_back(a);
    universe.push_back(b);
  }
  for (const auto& [node, group] : raw_groups) universe.push_back(node);
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.empty()) throw LoadError(edge_path + ": empty graph");

  const auto dense_of = [&](std::uint64_t id) {
    return static_cast<ItemId>(std::lower_bound(universe.begin(), universe.end(), id) -
                               universe.begin());
  };
  std::vector<std::pair<ItemId, ItemId>> edges;
  edges.reserve(raw_edges.size());
  for (const auto& [a, b] : raw_edges) edges.emplace_back(dense_of(a), dense_of(b));

  GroupMap groups = groups_from_pairs(raw_groups, universe, group_path);
  return {CoverageGroundSet(universe.size(), std::move(edges)), std::move(groups),
          std::move(universe)};
}

RecInstance load_rec_instance(const std::string& feature_path, const std::string& group_path,
                              double lambda) {
  LineReader reader(feature_path);
  if (!reader.next()) throw LoadError(feature_path + ": missing 'n d' header");
  const auto header = tokens_of(reader.line());
  if (header.size() != 2) {
    throw LoadError(reader.where() + ": header must be 'n d', got '" + reader.line() + "'");
  }
  const std::size_t n = parse_u64(header[0], reader.where());
  const std::size_t d = parse_u64(header[1], reader.where());

  std::vector<double> features(n * d, 0.0);
  std::vector<bool> seen(n, false);
  for (std::size_t row = 0; row < n; ++row) {
    if (!reader.next()) throw LoadError(feature_path + ": expected " + std::to_string(n) +
                                        " item rows, file ended after " + std::to_string(row));
    const auto toks = tokens_of(reader.line());
    if (toks.size() != d + 1) {
      throw LoadError(reader.where() + ": expected an id and " + std::to_string(d) +
                      " features, got " + std::to_string(toks.size()) + " fields");
    }
    const std::uint64_t id = parse_u64(toks[0], reader.where());
    if (id >= n) throw LoadError(reader.where() + ": item id " + toks[0] + " not in [0, n)");
    if (seen[id]) throw LoadError(reader.where() + ": duplicate row for item " + toks[0]);
    seen[id] = true;
    for (std::size_t j = 0; j < d; ++j) {
      const double f = parse_real(toks[j + 1], reader.where());
      if (f < 0.0) throw LoadError(reader.where() + ": negative feature '" + toks[j + 1] + "'");
      features[id * d + j] = f;
    }
  }

  if (!reader.next()) throw LoadError(feature_path + ": missing 'user ...' line");
  const auto user_toks = tokens_of(reader.line());
  if (user_toks.size() != d + 1 || user_toks[0] != "user") {
    throw LoadError(reader.where() + ": expected 'user' and " + std::to_string(d) + " features");
  }
  std::vector<double> user(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    const double f = parse_real(user_toks[j + 1], reader.where());
    if (f < 0.0) throw LoadError(reader.where() + ": negative feature '" + user_toks[j + 1] + "'");
    user[j] = f;
  }
  if (reader.next()) throw LoadError(reader.where() + ": unexpected content after the user line");

  const auto raw_groups = read_id_pairs(group_path, "node group");
  std::vector<std::uint64_t> universe(n);
  for (std::size_t i = 0; i < n; ++i) universe[i] = i;
  GroupMap groups = groups_from_pairs(raw_groups, universe, group_path);

  return {RecGroundSet(n, d, std::move(features), std::move(user), lambda), std::move(groups)};
}

std::vector<std::pair<ItemId, ItemId>> gen_ba_edges(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw ConfigError("graph generation needs n >= 3, got " + std::to_string(n));
  Rng rng(seed);

  std::set<std::pair<ItemId, ItemId>> present;
  std::vector<std::pair<ItemId, ItemId>> edges;
  // One slot per edge endpoint, so a uniform draw lands on a node with
  // probability proportional to its degree.
  std::vector<ItemId> endpoints;
  const auto link = [&](ItemId a, ItemId b) {
    present.emplace(std::min(a, b), std::max(a, b));
    edges.emplace_back(a, b);
    endpoints.push_back(a);
    endpoints.push_back(b);
  };

  link(0, 1);
  for (ItemId v = 2; v < n; ++v) {
    const ItemId target = endpoints[rng.bounded(endpoints.size())];
    link(v, target);
  }
  // n-1 growth edges so far; top up with preferential pairs until m = n.
  while (edges.size() < n) {
    bool placed = false;
    for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
      const ItemId a = endpoints[rng.bounded(endpoints.size())];
      const ItemId b = endpoints[rng.bounded(endpoints.size())];
      if (a == b || present.count({std::min(a, b), std::max(a, b)}) != 0) continue;
      link(a, b);
      placed = true;
    }
    if (!placed) {
      // Near-complete graphs can starve the sampler; take the first free pair.
      for (ItemId a = 0; a < n && !placed; ++a) {
        for (ItemId b = a + 1; b < n && !placed; ++b) {
          if (present.count({a, b}) != 0) continue;
          link(a, b);
          placed = true;
        }
      }
    }
  }
  return edges;
}

CoverageGroundSet gen_ba(std::size_t n, std::uint64_t seed) {
  const auto edges = gen_ba_edges(n, seed);
  std::vector<std::pair<ItemId, ItemId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  return CoverageGroundSet(n, std::move(arcs));
}

GroupMap zipf_groups(std::size_t n, std::size_t l, double s, std::uint64_t seed) {
  if (l < 1) throw ConfigError("need at least one group");
  if (!(s > 0.0)) throw ConfigError("zipf exponent must be positive, got " + std::to_string(s));
  if (n < l) {
    throw DegeneratePartitionError("cannot give " + std::to_string(l) + " groups at least one of " +
                                   std::to_string(n) + " nodes");
  }

  std::vector<double> weights(l);
  for (std::size_t i = 0; i < l; ++i) weights[i] = std::pow(static_cast<double>(i + 1), -s);
  auto sizes = apportion_by_weight(weights, n);

  // Rounding can zero out the smallest groups; move one node each from the
  // last largest holder, which keeps sizes non-increasing.
  for (std::size_t g = 0; g < l; ++g) {
    if (sizes[g] != 0) continue;
    std::size_t donor = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (sizes[i] >= sizes[donor]) donor = i;
    }
    --sizes[donor];
    sizes[g] = 1;
  }

  GroupMap groups;
  groups.reserve(n);
  for (GroupId g = 0; g < l; ++g) groups.insert(groups.end(), sizes[g], g);
  Rng rng(seed);
  rng.shuffle(groups);
  return groups;
}

void write_edge_list(const std::string& path, const CoverageGroundSet& graph) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot write " + path);
  for (ItemId v = 0; v < graph.node_count(); ++v) {
    for (ItemId u : graph.neighbors(v)) out << v << ' ' << u << '\n';
  }
  if (!out.flush()) throw LoadError("failed writing " + path);
}

void write_group_map(const std::string& path, const GroupMap& groups) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot write " + path);
  for (ItemId v = 0; v < groups.size(); ++v) out << v << ' ' << groups[v] << '\n';
  if (!out.flush()) throw LoadError("failed writing " + path);
}

}  // namespace fairstream
