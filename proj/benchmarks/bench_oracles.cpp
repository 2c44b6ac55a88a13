// Microbenchmarks for the two value oracles: marginal gain queries against a
// partially committed state, and the cost of committing items.

#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "fairstream/coverage.hpp"
#include "fairstream/data_io.hpp"
#include "fairstream/recommendation.hpp"
#include "fairstream/rng.hpp"

namespace {

using namespace fairstream;

RecGroundSet make_rec_ground(std::size_t n, std::size_t d) {
  Rng rng(12);
  std::vector<double> features(n * d);
  for (double& x : features) x = rng.unit_real();
  std::vector<double> user(d);
  for (double& x : user) x = rng.unit_real();
  return RecGroundSet(n, d, std::move(features), std::move(user), 0.75);
}

void BM_CoverageMarginalGain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graph = gen_ba(n, 1);
  const CoverageOracle oracle(graph);

  auto committed = oracle.empty_state();
  for (ItemId v = 0; v < n / 10; ++v) oracle.commit(*committed, v);

  ItemId probe = static_cast<ItemId>(n / 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.marginal_gain(*committed, probe));
    probe = static_cast<ItemId>((probe + 1) % n);
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_CoverageCommit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graph = gen_ba(n, 1);
  const CoverageOracle oracle(graph);

  for (auto _ : state) {
    auto fresh = oracle.empty_state();
    for (ItemId v = 0; v < 100; ++v) oracle.commit(*fresh, v);
    benchmark::DoNotOptimize(fresh);
  }
  state.SetItemsProcessed(state.iterations() * 100);
}

void BM_RecMarginalGain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ground = make_rec_ground(n, 16);
  const RecommendationOracle oracle(ground);

  auto committed = oracle.empty_state();
  for (ItemId v = 0; v < n / 10; ++v) oracle.commit(*committed, v);

  ItemId probe = static_cast<ItemId>(n / 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.marginal_gain(*committed, probe));
    probe = static_cast<ItemId>((probe + 1) % n);
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_StateClone(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto graph = gen_ba(n, 1);
  const CoverageOracle oracle(graph);

  auto committed = oracle.empty_state();
  for (ItemId v = 0; v < n / 10; ++v) oracle.commit(*committed, v);

  for (auto _ : state) {
    auto copy = committed->clone();
    benchmark::DoNotOptimize(copy);
  }
}

BENCHMARK(BM_CoverageMarginalGain)->Arg(1000)->Arg(10000)->Arg(100000);
BENCHMARK(BM_CoverageCommit)->Arg(1000)->Arg(10000);
BENCHMARK(BM_RecMarginalGain)->Arg(1000)->Arg(10000);
BENCHMARK(BM_StateClone)->Arg(1000)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
