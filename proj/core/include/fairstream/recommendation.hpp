#pragma once

#include <span>
#include <vector>

#include "fairstream/oracle.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

/// Item and user feature vectors for the personalized-recommendation
/// objective. All entries must be nonnegative (the objective is monotone
/// only for nonnegative inner products); violations are rejected at
/// construction.
class RecGroundSet {
 public:
  RecGroundSet(std::size_t n, std::size_t d, std::vector<double> item_vectors,
               std::vector<double> user_vector, double lambda);

  std::size_t item_count() const { return n_; }
  std::size_t dimension() const { return d_; }
  double lambda() const { return lambda_; }

  std::span<const double> item(ItemId v) const { return {items_.data() + v * d_, d_}; }
  std::span<const double> user() const { return user_; }

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> items_;  // row-major n x d
  std::vector<double> user_;
  double lambda_;
};

/// Facility-location-style recommendation objective
///   f(S) = λ Σ_{v'∈V} max_{v∈S} ⟨v',v⟩ + (1−λ) Σ_{v∈S} ⟨u,v⟩
/// with max over the empty selection defined as 0.
class RecommendationOracle final : public ValueOracle {
 public:
  explicit RecommendationOracle(const RecGroundSet& ground);

  std::size_t ground_size() const override { return ground_.item_count(); }
  std::unique_ptr<OracleState> empty_state() const override;

  const RecGroundSet& ground() const { return ground_; }

 protected:
  double gain_impl(const OracleState& state, ItemId v) const override;
  double commit_impl(OracleState& state, ItemId v) const override;
  double singleton_impl(ItemId v) const override;

 private:
  struct State;
  double dot_items(ItemId a, ItemId b) const;

  const RecGroundSet& ground_;
  std::vector<double> item_sum_;        // Σ_{v'∈V} v', for O(d) singletons
  std::vector<double> user_relevance_;  // ⟨u,v⟩ per item
};

}  // namespace fairstream
