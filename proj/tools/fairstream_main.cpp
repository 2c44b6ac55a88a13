// Command-line harness: runs selection algorithms over datasets or generated
// graphs and writes one CSV row per grid cell, or generates datasets to disk.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairstream/coverage.hpp"
#include "fairstream/data_io.hpp"
#include "fairstream/errors.hpp"
#include "fairstream/experiment.hpp"
#include "fairstream/recommendation.hpp"

namespace {

using fairstream::Algorithm;
using fairstream::BufferSpec;
using fairstream::ConfigError;
using fairstream::ExperimentConfig;
using fairstream::OrderSpec;
using fairstream::PolicySpec;

std::vector<std::string> split(const std::string& text, char delim) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(delim, start);
    if (end == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& tok, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ConfigError(what + " must be a nonnegative integer, got '" + tok + "'");
  }
  return value;
}

double parse_real(const std::string& tok, const std::string& what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ConfigError(what + " must be a number, got '" + tok + "'");
  }
  return value;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "mp-fsm") return Algorithm::kMpFsm;
  if (name == "sp-fsm") return Algorithm::kSpFsm;
  if (name == "exchange") return Algorithm::kExchange;
  throw ConfigError("unknown algorithm '" + name +
                    "' (expected greedy, mp-fsm, sp-fsm, or exchange)");
}

PolicySpec parse_policy(const std::string& text) {
  PolicySpec policy;
  if (text == "pr") {
    policy.kind = PolicySpec::Kind::kProportional;
  } else if (text == "er") {
    policy.kind = PolicySpec::Kind::kEqual;
  } else if (text.rfind("explicit:", 0) == 0) {
    policy.kind = PolicySpec::Kind::kExplicit;
    for (const std::string& tok : split(text.substr(9), ',')) {
      policy.budgets.push_back(parse_u64(tok, "explicit budget"));
    }
    if (policy.budgets.empty()) throw ConfigError("explicit policy needs at least one budget");
  } else {
    throw ConfigError("unknown policy '" + text + "' (expected pr, er, or explicit:<list>)");
  }
  return policy;
}

OrderSpec parse_order(const std::string& text) {
  OrderSpec order;
  if (text == "natural") {
    order.kind = OrderSpec::Kind::kNatural;
  } else if (text == "adversarial") {
    order.kind = OrderSpec::Kind::kAdversarial;
  } else if (text.rfind("shuffle:", 0) == 0) {
    order.kind = OrderSpec::Kind::kShuffle;
    order.shuffle_seed = parse_u64(text.substr(8), "shuffle seed");
  } else {
    throw ConfigError("unknown order '" + text +
                      "' (expected natural, shuffle:<seed>, or adversarial)");
  }
  return order;
}

BufferSpec parse_buffer(const std::string& text) {
  BufferSpec buffer;
  if (text == "inf") {
    buffer.kind = BufferSpec::Kind::kUnlimited;
  } else if (text == "2k") {
    buffer.kind = BufferSpec::Kind::kTwoK;
  } else {
    buffer.kind = BufferSpec::Kind::kExplicit;
    buffer.value = parse_u64(text, "buffer capacity");
    if (buffer.value == 0) throw ConfigError("buffer capacity must be positive");
  }
  return buffer;
}

struct ZipfParams {
  std::size_t l = 10;
  double s = 2.0;
};

ZipfParams parse_zipf(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 || parts[0] != "zipf") {
    throw ConfigError("group spec must look like zipf:<l>:<s>, got '" + text + "'");
  }
  ZipfParams zipf;
  zipf.l = parse_u64(parts[1], "group count");
  zipf.s = parse_real(parts[2], "zipf exponent");
  return zipf;
}

/// Owns whichever ground set was loaded plus the oracle viewing it. The
/// oracle holds a reference into the instance, so a Dataset must stay put
/// once `oracle` exists.
struct Dataset {
  std::optional<fairstream::CoverageInstance> coverage;
  std::optional<fairstream::RecInstance> rec;
  std::unique_ptr<fairstream::ValueOracle> oracle;
  const fairstream::GroupMap* groups = nullptr;
  std::string id;
};

void load_dataset(Dataset& data, const std::string& dir, double lambda) {
  namespace fsys = std::filesystem;
  const fsys::path base(dir);
  if (fsys::exists(base / "features.txt")) {
    data.rec = fairstream::load_rec_instance((base / "features.txt").string(),
                                             (base / "groups.txt").string(), lambda);
    data.oracle = std::make_unique<fairstream::RecommendationOracle>(data.rec->ground);
    data.groups = &data.rec->groups;
  } else {
    data.coverage = fairstream::load_coverage_instance((base / "edges.txt").string(),
                                                       (base / "groups.txt").string());
    data.oracle = std::make_unique<fairstream::CoverageOracle>(data.coverage->graph);
    data.groups = &data.coverage->groups;
  }
  data.id = base.filename().empty() ? base.parent_path().filename().string()
                                    : base.filename().string();
  if (data.id.empty()) data.id = dir;
}

void generate_dataset(Dataset& data, std::size_t n, const ZipfParams& zipf, std::uint64_t seed) {
  fairstream::CoverageInstance instance{fairstream::gen_ba(n, seed),
                                        fairstream::zipf_groups(n, zipf.l, zipf.s, seed),
                                        {}};
  instance.original_ids.resize(n);
  std::iota(instance.original_ids.begin(), instance.original_ids.end(), 0);
  data.coverage = std::move(instance);
  data.oracle = std::make_unique<fairstream::CoverageOracle>(data.coverage->graph);
  data.groups = &data.coverage->groups;
  data.id = "ba:" + std::to_string(n);
}

struct RunOptions {
  std::vector<std::string> algs;
  std::string data_dir;
  std::uint64_t gen_n = 0;
  std::string gen_groups = "zipf:10:2";
  std::vector<std::uint64_t> ks;
  std::vector<std::string> policies;
  std::vector<std::string> orders;
  double epsilon = 0.2;
  double alpha = 0.5;
  double beta = 0.5;
  std::string buffer = "inf";
  double subsample = 1.0;
  double lambda = 0.75;
  bool reference = false;
  std::uint64_t seed = 0;
  std::string out;
};

int do_run(const RunOptions& opt) {
  ExperimentConfig cfg;
  for (const std::string& a : opt.algs) cfg.algorithms.push_back(parse_algorithm(a));
  for (const std::string& p : opt.policies) cfg.policies.push_back(parse_policy(p));
  for (const std::string& o : opt.orders) cfg.orders.push_back(parse_order(o));
  if (cfg.policies.empty()) cfg.policies.push_back(PolicySpec{});
  if (cfg.orders.empty()) cfg.orders.push_back(OrderSpec{});
  cfg.buffer = parse_buffer(opt.buffer);
  cfg.epsilon = opt.epsilon;
  cfg.alpha = opt.alpha;
  cfg.beta = opt.beta;
  cfg.subsample = opt.subsample;
  cfg.reference = opt.reference;
  cfg.seed = fairstream::effective_seed(opt.seed);

  for (std::uint64_t k : opt.ks) cfg.ks.push_back(static_cast<std::size_t>(k));
  // Explicit budgets carry their own k; the sweep must agree with it.
  for (const PolicySpec& p : cfg.policies) {
    if (p.kind != PolicySpec::Kind::kExplicit) continue;
    const std::size_t sum = std::accumulate(p.budgets.begin(), p.budgets.end(), std::size_t{0});
    if (cfg.ks.empty()) cfg.ks.push_back(sum);
    for (std::size_t k : cfg.ks) {
      if (k != sum) {
        throw ConfigError("policy " + p.label() + " sums to " + std::to_string(sum) +
                          " but --k asks for " + std::to_string(k));
      }
    }
  }
  if (cfg.ks.empty()) throw ConfigError("--k is required");
  if (cfg.algorithms.empty()) throw ConfigError("--alg is required");

  Dataset data;
  if (!opt.data_dir.empty()) {
    load_dataset(data, opt.data_dir, opt.lambda);
  } else if (opt.gen_n > 0) {
    generate_dataset(data, static_cast<std::size_t>(opt.gen_n), parse_zipf(opt.gen_groups),
                     cfg.seed);
  } else {
    throw ConfigError("either --data <dir> or --gen <n> is required");
  }
  cfg.dataset_id = data.id;

  const auto records = fairstream::run_experiment(cfg, *data.oracle, *data.groups);
  fairstream::emit_csv(records, opt.out);
  return fairstream::all_infeasible(records) ? 2 : 0;
}

struct GenOptions {
  std::string model = "ba";
  std::uint64_t n = 0;
  std::string groups = "zipf:10:2";
  std::uint64_t seed = 0;
  std::string out;
};

int do_gen(const GenOptions& opt) {
  if (opt.model != "ba") {
    throw ConfigError("unknown model '" + opt.model + "' (only ba is supported)");
  }
  const ZipfParams zipf = parse_zipf(opt.groups);
  const auto n = static_cast<std::size_t>(opt.n);
  const auto graph = fairstream::gen_ba(n, opt.seed);
  const auto groups = fairstream::zipf_groups(n, zipf.l, zipf.s, opt.seed);

  std::filesystem::create_directories(opt.out);
  const std::filesystem::path base(opt.out);
  fairstream::write_edge_list((base / "edges.txt").string(), graph);
  fairstream::write_group_map((base / "groups.txt").string(), groups);
  std::cout << "wrote " << graph.node_count() << " nodes, " << graph.edge_count() / 2
            << " edges, " << zipf.l << " groups to " << opt.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fair subset selection over item streams"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run an algorithm grid and write a CSV");
  run->add_option("--alg", run_opt.algs, "algorithms: greedy, mp-fsm, sp-fsm, exchange")
      ->required()
      ->delimiter(',');
  run->add_option("--data", run_opt.data_dir,
                  "dataset directory (features.txt+groups.txt or edges.txt+groups.txt)");
  run->add_option("--gen", run_opt.gen_n, "generate a preferential-attachment graph with n nodes");
  run->add_option("--groups", run_opt.gen_groups, "group spec for --gen, zipf:<l>:<s>")
      ->capture_default_str();
  run->add_option("--k", run_opt.ks, "selection sizes to sweep")->delimiter(',');
  run->add_option("--policy", run_opt.policies, "pr, er, or explicit:<k_1,k_2,...>");
  run->add_option("--order", run_opt.orders, "natural, shuffle:<seed>, or adversarial");
  run->add_option("--epsilon", run_opt.epsilon, "threshold decay per pass")
      ->capture_default_str();
  run->add_option("--alpha", run_opt.alpha, "threshold grid spacing")->capture_default_str();
  run->add_option("--beta", run_opt.beta, "buffer admission slack")->capture_default_str();
  run->add_option("--buffer", run_opt.buffer, "buffer capacity: inf, 2k, or an integer")
      ->capture_default_str();
  run->add_option("--subsample", run_opt.subsample, "stream fraction the exchange baseline sees")
      ->capture_default_str();
  run->add_option("--lambda", run_opt.lambda, "recommendation objective tradeoff")
      ->capture_default_str();
  run->add_flag("--reference", run_opt.reference, "add unconstrained greedy reference rows");
  run->add_option("--seed", run_opt.seed, "RNG seed (FAIRSTREAM_SEED overrides)")
      ->capture_default_str();
  run->add_option("--out", run_opt.out, "output CSV path")->required();

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "generate a dataset directory");
  gen->add_option("--model", gen_opt.model, "graph model (ba)")->capture_default_str();
  gen->add_option("--n", gen_opt.n, "node count")->required();
  gen->add_option("--groups", gen_opt.groups, "group spec, zipf:<l>:<s>")->capture_default_str();
  gen->add_option("--seed", gen_opt.seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", gen_opt.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return do_run(run_opt);
    return do_gen(gen_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
