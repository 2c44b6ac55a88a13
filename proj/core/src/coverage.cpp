#include "fairstream/coverage.hpp"

#include <algorithm>

namespace fairstream {

CoverageGroundSet::CoverageGroundSet(std::size_t n,
                                     std::vector<std::pair<ItemId, ItemId>> edges) {
  for (const auto& [src, dst] : edges) {
    if (src >= n || dst >= n) {
      throw InvalidItemError("edge endpoint outside ground set of size " + std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  offsets_.assign(n + 1, 0);
  for (const auto& [src, dst] : edges) ++offsets_[src + 1];
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  neighbors_.resize(edges.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [src, dst] : edges) neighbors_[cursor[src]++] = dst;
}

struct CoverageOracle::State final : OracleState {
  explicit State(std::size_t n) : covered(n, false) {}

  std::unique_ptr<OracleState> clone() const override {
    return std::make_unique<State>(*this);
  }

  void set_utility(double u) { utility_ = u; }

  std::vector<bool> covered;
  std::size_t covered_count = 0;
};

std::unique_ptr<OracleState> CoverageOracle::empty_state() const {
  return std::make_unique<State>(graph_.node_count());
}

double CoverageOracle::gain_impl(const OracleState& state, ItemId v) const {
  const auto& s = static_cast<const State&>(state);
  std::size_t fresh = 0;
  for (ItemId u : graph_.neighbors(v)) fresh += !s.covered[u];
  return static_cast<double>(fresh);
}

double CoverageOracle::commit_impl(OracleState& state, ItemId v) const {
  auto& s = static_cast<State&>(state);
  std::size_t fresh = 0;
  for (ItemId u : graph_.neighbors(v)) {
    if (!s.covered[u]) {
      s.covered[u] = true;
      ++fresh;
    }
  }
  s.covered_count += fresh;
  s.set_utility(static_cast<double>(s.covered_count));
  return static_cast<double>(fresh);
}

double CoverageOracle::singleton_impl(ItemId v) const {
  return static_cast<double>(graph_.out_degree(v));
}

}  // namespace fairstream
