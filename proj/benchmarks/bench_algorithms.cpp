// End-to-end benchmarks for the selection algorithms on generated coverage
// instances. Oracle call counts are reported as counters so throughput and
// query economy can be compared in one table.

#include <cstddef>

#include <benchmark/benchmark.h>

#include "fairstream/coverage.hpp"
#include "fairstream/data_io.hpp"
#include "fairstream/exchange.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/mp_fsm.hpp"
#include "fairstream/solvers.hpp"
#include "fairstream/sp_fsm.hpp"
#include "fairstream/stream.hpp"

namespace {

using namespace fairstream;

constexpr std::size_t kGroups = 5;
constexpr std::size_t kBudget = 20;

struct Instance {
  CoverageGroundSet graph;
  GroupMap groups;
  FairnessSpec spec;

  explicit Instance(std::size_t n)
      : graph(gen_ba(n, 3)),
        groups(zipf_groups(n, kGroups, 2.0, 3)),
        spec(allocate_proportional(group_sizes(groups, kGroups), kBudget)) {}
};

void BM_Greedy(benchmark::State& state) {
  const Instance inst(static_cast<std::size_t>(state.range(0)));
  const CoverageOracle oracle(inst.graph);

  std::uint64_t calls = 0;
  for (auto _ : state) {
    const auto report = run_greedy(oracle, inst.groups, inst.spec);
    calls = report.oracle_calls;
    benchmark::DoNotOptimize(report.solution);
  }
  state.counters["oracle_calls"] = static_cast<double>(calls);
}

void BM_LazyGreedy(benchmark::State& state) {
  const Instance inst(static_cast<std::size_t>(state.range(0)));
  const CoverageOracle oracle(inst.graph);

  std::uint64_t calls = 0;
  for (auto _ : state) {
    const auto report = run_lazy_greedy(oracle, inst.groups, inst.spec);
    calls = report.oracle_calls;
    benchmark::DoNotOptimize(report.solution);
  }
  state.counters["oracle_calls"] = static_cast<double>(calls);
}

void BM_MpFsm(benchmark::State& state) {
  const Instance inst(static_cast<std::size_t>(state.range(0)));
  const CoverageOracle oracle(inst.graph);
  const auto order = natural_order(inst.groups);

  std::uint64_t calls = 0;
  std::size_t passes = 0;
  for (auto _ : state) {
    MaterializedStream stream(order);
    const auto report = run_mp_fsm(stream, oracle, inst.groups, inst.spec, {.seed = 3});
    calls = report.oracle_calls;
    passes = report.passes;
    benchmark::DoNotOptimize(report.solution);
  }
  state.counters["oracle_calls"] = static_cast<double>(calls);
  state.counters["passes"] = static_cast<double>(passes);
}

void BM_SpFsm(benchmark::State& state) {
  const Instance inst(static_cast<std::size_t>(state.range(0)));
  const CoverageOracle oracle(inst.graph);
  const auto order = natural_order(inst.groups);

  std::uint64_t calls = 0;
  std::size_t peak = 0;
  for (auto _ : state) {
    ForwardOnlyStream stream(order);
    const auto report = run_sp_fsm(stream, oracle, inst.groups, inst.spec, {.seed = 3});
    calls = report.oracle_calls;
    peak = report.peak_buffer;
    benchmark::DoNotOptimize(report.solution);
  }
  state.counters["oracle_calls"] = static_cast<double>(calls);
  state.counters["peak_buffer"] = static_cast<double>(peak);
}

void BM_Exchange(benchmark::State& state) {
  const Instance inst(static_cast<std::size_t>(state.range(0)));
  const CoverageOracle oracle(inst.graph);
  const auto order = natural_order(inst.groups);

  std::uint64_t calls = 0;
  for (auto _ : state) {
    ForwardOnlyStream stream(order);
    const auto report = run_exchange(stream, oracle, inst.groups, inst.spec, {.seed = 3});
    calls = report.oracle_calls;
    benchmark::DoNotOptimize(report.solution);
  }
  state.counters["oracle_calls"] = static_cast<double>(calls);
}

BENCHMARK(BM_Greedy)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LazyGreedy)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MpFsm)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpFsm)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Exchange)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
