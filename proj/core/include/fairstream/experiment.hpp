#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fairstream/oracle.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

enum class Algorithm { kGreedy, kMpFsm, kSpFsm, kExchange };

struct PolicySpec {
  enum class Kind { kProportional, kEqual, kExplicit };
  Kind kind = Kind::kProportional;
  std::vector<std::size_t> budgets;  // kExplicit only

  std::string label() const;
};

struct OrderSpec {
  enum class Kind { kNatural, kShuffle, kAdversarial };
  Kind kind = Kind::kNatural;
  std::uint64_t shuffle_seed = 0;

  std::string label() const;
};

struct BufferSpec {
  enum class Kind { kUnlimited, kTwoK, kExplicit };
  Kind kind = Kind::kUnlimited;
  std::size_t value = 0;  // kExplicit only

  std::size_t capacity_for(std::size_t k) const;
};

struct ExperimentConfig {
  std::string dataset_id = "dataset";
  std::vector<Algorithm> algorithms;
  std::vector<std::size_t> ks;
  std::vector<PolicySpec> policies;
  std::vector<OrderSpec> orders;
  double epsilon = 0.2;
  double alpha = 0.5;
  double beta = 0.5;
  BufferSpec buffer;
  double subsample = 1.0;
  bool reference = false;  // add unconstrained greedy rows per k
  std::uint64_t seed = 0;
};

/// One CSV row. Schema v1, pinned by tests:
/// algorithm,dataset,order,policy,k,utility,oracle_calls,passes,wall_ms,peak_buffer,seed,status
struct RunRecord {
  std::string algorithm;
  std::string dataset;
  std::string order;
  std::string policy;
  std::size_t k = 0;
  double utility = 0.0;
  std::uint64_t oracle_calls = 0;
  std::size_t passes = 0;
  double wall_ms = 0.0;
  std::size_t peak_buffer = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";  // ok | infeasible | violated
};

/// Executes the (k x policy x order x algorithm) grid in that nesting order,
/// one record per cell; infeasible cells become status=infeasible rows.
/// Reference rows (unconstrained greedy per k, order and policy "none")
/// follow the grid when requested.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, const ValueOracle& oracle,
                                      const GroupMap& groups);

const std::string& csv_header();

/// Shortest round-trip decimal form of x (what the CSV stores).
std::string format_double(double x);

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out);
void emit_csv(const std::vector<RunRecord>& records, const std::string& path);

/// --seed value unless the FAIRSTREAM_SEED environment variable overrides it.
std::uint64_t effective_seed(std::uint64_t cli_seed);

/// True when every record came out infeasible (the exit-code-2 condition).
bool all_infeasible(const std::vector<RunRecord>& records);

}  // namespace fairstream
