#include "fairstream/recommendation.hpp"

#include <string>

namespace fairstream {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

RecGroundSet::RecGroundSet(std::size_t n, std::size_t d, std::vector<double> item_vectors,
                           std::vector<double> user_vector, double lambda)
    : n_(n), d_(d), items_(std::move(item_vectors)), user_(std::move(user_vector)), lambda_(lambda) {
  if (items_.size() != n_ * d_) {
    throw ConfigError("item matrix has " + std::to_string(items_.size()) +
                      " entries, expected n*d = " + std::to_string(n_ * d_));
  }
  if (user_.size() != d_) {
    throw ConfigError("user vector dimension " + std::to_string(user_.size()) +
                      " does not match d = " + std::to_string(d_));
  }
  if (lambda_ < 0.0 || lambda_ > 1.0) {
    throw ConfigError("lambda must lie in [0,1]");
  }
  for (double x : items_) {
    if (x < 0.0) throw ConfigError("negative item feature entry");
  }
  for (double x : user_) {
    if (x < 0.0) throw ConfigError("negative user feature entry");
  }
}

struct RecommendationOracle::State final : OracleState {
  explicit State(std::size_t n) : best(n, 0.0) {}

  std::unique_ptr<OracleState> clone() const override {
    return std::make_unique<State>(*this);
  }

  void add_utility(double gain) { utility_ += gain; }

  std::vector<double> best;      // max_{v∈S} ⟨v',v⟩ per ground item v'
  double relevance_sum = 0.0;    // Σ_{v∈S} ⟨u,v⟩
};

RecommendationOracle::RecommendationOracle(const RecGroundSet& ground) : ground_(ground) {
  const std::size_t n = ground_.item_count();
  const std::size_t d = ground_.dimension();
  item_sum_.assign(d, 0.0);
  user_relevance_.resize(n);
  for (ItemId v = 0; v < n; ++v) {
    auto row = ground_.item(v);
    for (std::size_t j = 0; j < d; ++j) item_sum_[j] += row[j];
    user_relevance_[v] = dot(ground_.user(), row);
  }
}

std::unique_ptr<OracleState> RecommendationOracle::empty_state() const {
  return std::make_unique<State>(ground_.item_count());
}

double RecommendationOracle::dot_items(ItemId a, ItemId b) const {
  return dot(ground_.item(a), ground_.item(b));
}

double RecommendationOracle::gain_impl(const OracleState& state, ItemId v) const {
  const auto& s = static_cast<const State&>(state);
  const double lambda = ground_.lambda();
  double coverage_gain = 0.0;
  for (ItemId other = 0; other < ground_.item_count(); ++other) {
    const double ip = dot_items(other, v);
    if (ip > s.best[other]) coverage_gain += ip - s.best[other];
  }
  return lambda * coverage_gain + (1.0 - lambda) * user_relevance_[v];
}

double RecommendationOracle::commit_impl(OracleState& state, ItemId v) const {
  auto& s = static_cast<State&>(state);
  const double lambda = ground_.lambda();
  double coverage_gain = 0.0;
  for (ItemId other = 0; other < ground_.item_count(); ++other) {
    const double ip = dot_items(other, v);
    if (ip > s.best[other]) {
      coverage_gain += ip - s.best[other];
      s.best[other] = ip;
    }
  }
  s.relevance_sum += user_relevance_[v];
  const double gain = lambda * coverage_gain + (1.0 - lambda) * user_relevance_[v];
  s.add_utility(gain);
  return gain;
}

double RecommendationOracle::singleton_impl(ItemId v) const {
  const double lambda = ground_.lambda();
  return lambda * dot(std::span<const double>(item_sum_), ground_.item(v)) +
         (1.0 - lambda) * user_relevance_[v];
}

}  // namespace fairstream
