#include "fairstream/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>

#include "fairstream/errors.hpp"
#include "fairstream/exchange.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/mp_fsm.hpp"
#include "fairstream/solvers.hpp"
#include "fairstream/sp_fsm.hpp"
#include "fairstream/stream.hpp"

namespace fairstream {

namespace {

std::string join_sizes(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

const char* algorithm_label(Algorithm alg) {
  switch (alg) {
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kMpFsm:
      return "mp-fsm";
    case Algorithm::kSpFsm:
      return "sp-fsm";
    case Algorithm::kExchange:
      return "exchange";
  }
  return "unknown";
}

class Timer {
 public:
  double elapsed_ms() const {
    const auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string PolicySpec::label() const {
  switch (kind) {
    case Kind::kProportional:
      return "pr";
    case Kind::kEqual:
      return "er";
    case Kind::kExplicit:
      return "explicit:" + join_sizes(budgets);
  }
  return "unknown";
}

std::string OrderSpec::label() const {
  switch (kind) {
    case Kind::kNatural:
      return "natural";
    case Kind::kShuffle:
      return "shuffle:" + std::to_string(shuffle_seed);
    case Kind::kAdversarial:
      return "adversarial";
  }
  return "unknown";
}

std::size_t BufferSpec::capacity_for(std::size_t k) const {
  switch (kind) {
    case Kind::kUnlimited:
      return SpFsmConfig::kUnlimitedBuffer;
    case Kind::kTwoK:
      return 2 * k;
    case Kind::kExplicit:
      return value;
  }
  return SpFsmConfig::kUnlimitedBuffer;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, const ValueOracle& oracle,
                                      const GroupMap& groups) {
  const std::size_t l = group_count(groups);
  const auto sizes = group_sizes(groups, l);

  // Orders are materialized once, outside any run's call-count window.
  std::vector<std::vector<StreamItem>> order_items;
  order_items.reserve(cfg.orders.size());
  for (const OrderSpec& order : cfg.orders) {
    switch (order.kind) {
      case OrderSpec::Kind::kNatural:
        order_items.push_back(natural_order(groups));
        break;
      case OrderSpec::Kind::kShuffle:
        order_items.push_back(shuffled_order(groups, order.shuffle_seed));
        break;
      case OrderSpec::Kind::kAdversarial:
        order_items.push_back(adversarial_order(groups, oracle));
        break;
    }
  }

  const auto make_spec = [&](const PolicySpec& policy,
                             std::size_t k) -> std::optional<FairnessSpec> {
    try {
      switch (policy.kind) {
        case PolicySpec::Kind::kProportional:
          return allocate_proportional(sizes, k);
        case PolicySpec::Kind::kEqual:
          return allocate_equal(sizes, k);
        case PolicySpec::Kind::kExplicit: {
          FairnessSpec spec(policy.budgets);
          spec.require_feasible(sizes);
          return spec;
        }
      }
    } catch (const InfeasibleBudgetError&) {
      return std::nullopt;
    }
    return std::nullopt;
  };

  std::vector<RunRecord> records;
  for (std::size_t k : cfg.ks) {
    for (const PolicySpec& policy : cfg.policies) {
      const auto spec = make_spec(policy, k);
      for (std::size_t oi = 0; oi < cfg.orders.size(); ++oi) {
        for (Algorithm alg : cfg.algorithms) {
          RunRecord rec;
          rec.algorithm = algorithm_label(alg);
          rec.dataset = cfg.dataset_id;
          rec.order = cfg.orders[oi].label();
          rec.policy = policy.label();
          rec.k = k;
          rec.seed = cfg.seed;
          if (!spec) {
            rec.status = "infeasible";
            records.push_back(std::move(rec));
            continue;
          }
          const Timer timer;
          switch (alg) {
            case Algorithm::kGreedy: {
              auto report = run_greedy(oracle, groups, *spec);
              rec.utility = report.solution.utility();
              rec.oracle_calls = report.oracle_calls;
              rec.passes = report.rounds;
              rec.status = report.solution.fair() ? "ok" : "violated";
              break;
            }
            case Algorithm::kMpFsm: {
              MaterializedStream stream(order_items[oi]);
              auto report =
                  run_mp_fsm(stream, oracle, groups, *spec, MpFsmConfig{cfg.epsilon, cfg.seed});
              rec.utility = report.solution.utility();
              rec.oracle_calls = report.oracle_calls;
              rec.passes = report.passes;
              rec.status = report.solution.fair() ? "ok" : "violated";
              break;
            }
            case Algorithm::kSpFsm: {
              ForwardOnlyStream stream(order_items[oi]);
              SpFsmConfig sp_cfg;
              sp_cfg.alpha = cfg.alpha;
              sp_cfg.beta = cfg.beta;
              sp_cfg.buffer_capacity = cfg.buffer.capacity_for(k);
              sp_cfg.seed = cfg.seed;
              auto report = run_sp_fsm(stream, oracle, groups, *spec, sp_cfg);
              rec.utility = report.solution.utility();
              rec.oracle_calls = report.oracle_calls;
              rec.passes = 1;
              rec.peak_buffer = report.peak_buffer;
              rec.status = report.solution.fair() ? "ok" : "violated";
              break;
            }
            case Algorithm::kExchange: {
              ForwardOnlyStream stream(order_items[oi]);
              auto report =
                  run_exchange(stream, oracle, groups, *spec, ExchangeConfig{cfg.subsample, cfg.seed});
              rec.utility = report.solution.utility();
              rec.oracle_calls = report.oracle_calls;
              rec.passes = 1;
              rec.status = report.solution.fair() ? "ok" : "violated";
              break;
            }
          }
          rec.wall_ms = timer.elapsed_ms();
          records.push_back(std::move(rec));
        }
      }
    }
  }

  if (cfg.reference) {
    // Unconstrained reference: one group holding everything, budget k.
    const GroupMap single_group(groups.size(), 0);
    for (std::size_t k : cfg.ks) {
      RunRecord rec;
      rec.algorithm = "greedy-ref";
      rec.dataset = cfg.dataset_id;
      rec.order = "none";
      rec.policy = "none";
      rec.k = k;
      rec.seed = cfg.seed;
      if (k > groups.size()) {
        rec.status = "infeasible";
        records.push_back(std::move(rec));
        continue;
      }
      const Timer timer;
      auto report = run_greedy(oracle, single_group, FairnessSpec({k}));
      rec.utility = report.solution.utility();
      rec.oracle_calls = report.oracle_calls;
      rec.passes = report.rounds;
      rec.status = report.solution.size() == k ? "ok" : "violated";
      rec.wall_ms = timer.elapsed_ms();
      records.push_back(std::move(rec));
    }
  }
  return records;
}

const std::string& csv_header() {
  static const std::string header =
      "algorithm,dataset,order,policy,k,utility,oracle_calls,passes,wall_ms,peak_buffer,seed,"
      "status";
  return header;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

namespace {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

}  // namespace

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out) {
  out << csv_header() << '\n';
  for (const RunRecord& r : records) {
    out << csv_field(r.algorithm) << ',' << csv_field(r.dataset) << ',' << csv_field(r.order)
        << ',' << csv_field(r.policy) << ',' << r.k << ',' << format_double(r.utility) << ','
        << r.oracle_calls << ',' << r.passes << ',' << format_ms(r.wall_ms) << ',' << r.peak_buffer
        << ',' << r.seed << ',' << csv_field(r.status) << '\n';
  }
}

void emit_csv(const std::vector<RunRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot write " + path);
  emit_csv(records, out);
  if (!out.flush()) throw LoadError("failed writing " + path);
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  const char* env = std::getenv("FAIRSTREAM_SEED");
  if (env == nullptr || *env == '\0') return cli_seed;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), value);
  if (ec != std::errc{} || *ptr != '\0') {
    throw ConfigError(std::string("FAIRSTREAM_SEED is not a valid seed: '") + env + "'");
  }
  return value;
}

bool all_infeasible(const std::vector<RunRecord>& records) {
  if (records.empty()) return false;
  for (const RunRecord& r : records) {
    if (r.status != "infeasible") return false;
  }
  return true;
}

}  // namespace fairstream
