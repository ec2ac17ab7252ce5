// Command-line front end: graph cleaning, single-source queries, walk-index
// construction, ground-truth generation and the sweep harness.
//
// Exit codes: 0 success, 1 usage error, 2 data error (parse or validation).

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppr/csv.hpp"
#include "ppr/graph.hpp"
#include "ppr/metrics.hpp"
#include "ppr/push.hpp"
#include "ppr/speedppr.hpp"
#include "ppr/sweep.hpp"
#include "ppr/walk_index.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ppr::Graph load_graph(const std::string& path, bool undirected) {
  if (ppr::is_graph_cache(path)) return ppr::load_graph_cache(path);
  return undirected ? ppr::undirected_to_directed(path) : ppr::load_edge_list(path);
}

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count());
}

struct CommonFlags {
  std::string graph_path;
  bool undirected = false;
  double alpha = ppr::kDefaultAlpha;
};

void add_common(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--graph", common.graph_path, "edge list or .pprg cache")->required();
  cmd->add_flag("--undirected", common.undirected,
                "treat each input pair as two directed edges");
  cmd->add_option("--alpha", common.alpha, "stop probability in [0,1)");
}

int run_clean(const CommonFlags& common, const std::string& out_path) {
  const ppr::Graph g = load_graph(common.graph_path, common.undirected);
  ppr::save_graph_cache(g, out_path);
  std::cout << "n=" << g.n() << " m=" << g.m()
            << " dead_ends=" << g.dead_ends().size() << "\n";
  return kExitOk;
}

struct QueryFlags {
  std::string algo;
  std::optional<double> lambda;
  std::optional<double> epsilon;
  std::optional<double> mu;
  std::optional<ppr::NodeId> source;
  std::uint64_t random_sources = 0;
  std::uint64_t seed = 0;
  std::uint32_t epochs = 8;
  std::optional<std::uint64_t> scan_threshold;
  std::string index_path;
  std::string out_path;
};

std::vector<ppr::NodeId> resolve_sources(const ppr::Graph& g, const QueryFlags& flags) {
  if (flags.source && flags.random_sources)
    throw UsageError("--source and --random-sources are mutually exclusive");
  if (flags.source) {
    if (*flags.source >= g.n()) throw std::runtime_error("--source is out of range");
    return {*flags.source};
  }
  if (flags.random_sources) return ppr::sample_sources(g, flags.random_sources, flags.seed);
  throw UsageError("one of --source or --random-sources is required");
}

ppr::QueryConfig make_config(const CommonFlags& common, const QueryFlags& flags) {
  ppr::QueryConfig cfg;
  cfg.alpha = common.alpha;
  cfg.lambda = flags.lambda;
  cfg.epsilon = flags.epsilon;
  cfg.mu = flags.mu;
  cfg.seed = flags.seed;
  cfg.epoch_num = flags.epochs;
  cfg.scan_threshold = flags.scan_threshold;
  cfg.validate();
  return cfg;
}

int run_query(const CommonFlags& common, const QueryFlags& flags) {
  if (!ppr::is_known_algo(flags.algo))
    throw UsageError("unknown --algo (expected powitr, fwdpush-fifo, simfwdpush, "
                     "powerpush or speedppr)");
  if (flags.algo == ppr::kAlgoSpeedPPR && !flags.epsilon)
    throw UsageError("speedppr requires --epsilon");

  const ppr::Graph g = load_graph(common.graph_path, common.undirected);
  const ppr::QueryConfig cfg = make_config(common, flags);
  const std::vector<ppr::NodeId> sources = resolve_sources(g, flags);

  std::optional<ppr::WalkIndex> index;
  if (!flags.index_path.empty()) {
    index = ppr::load_index(flags.index_path);
    index->check_compatible(g);
    if (index->alpha() != cfg.alpha)
      throw std::runtime_error("walk index was built for a different alpha");
  }

  const double lambda = cfg.lambda_for(g.m());
  std::cout << "algorithm,param,edge_pushes,wall_time_ns,achieved_r_sum\n";
  for (ppr::NodeId s : sources) {
    const auto start = std::chrono::steady_clock::now();
    ppr::PPRVector result;
    if (flags.algo == ppr::kAlgoPowItr) {
      result = ppr::power_iteration(g, s, cfg.alpha, lambda);
    } else if (flags.algo == ppr::kAlgoSimFwdPush) {
      result = ppr::sim_forward_push(g, s, cfg.alpha, lambda);
    } else if (flags.algo == ppr::kAlgoFifoFwdPush) {
      const double r_max = lambda / static_cast<double>(g.effective_edge_count());
      result = ppr::fifo_forward_push(g, s, cfg.alpha, r_max);
    } else if (flags.algo == ppr::kAlgoPowerPush) {
      result = ppr::power_push(g, s, cfg.alpha, lambda, cfg);
    } else {
      result = ppr::speedppr_query(g, s, cfg, index ? &*index : nullptr);
    }
    const std::uint64_t wall = elapsed_ns(start);

    const double param = flags.algo == ppr::kAlgoSpeedPPR ? *cfg.epsilon : lambda;
    std::cout << flags.algo << ',' << ppr::format_double(param) << ','
              << result.pushes << ',' << wall << ','
              << ppr::format_double(result.achieved_r_sum) << "\n";

    if (!flags.out_path.empty()) {
      // one file per source; a single source writes exactly --out
      const std::string path =
          sources.size() == 1 ? flags.out_path
                              : flags.out_path + "." + std::to_string(s);
      ppr::write_ppr_csv(path, result.estimates);
    }
  }
  return kExitOk;
}

int run_build_index(const CommonFlags& common, std::uint64_t seed,
                    const std::string& out_path) {
  const ppr::Graph g = load_graph(common.graph_path, common.undirected);
  const ppr::WalkIndex index = ppr::build_index(g, common.alpha, seed);
  ppr::save_index(index, out_path);
  std::cout << "endpoints=" << index.endpoint_count() << "\n";
  return kExitOk;
}

int run_groundtruth(const CommonFlags& common, ppr::NodeId source,
                    const std::string& out_path) {
  const ppr::Graph g = load_graph(common.graph_path, common.undirected);
  if (source >= g.n()) throw std::runtime_error("--source is out of range");
  const ppr::PPRVector truth = ppr::ground_truth(g, source, common.alpha);
  ppr::write_ppr_csv(out_path, truth.estimates);
  return kExitOk;
}

struct BenchFlags {
  std::vector<std::string> algos;
  std::vector<double> lambdas;
  std::vector<double> epsilons;
  std::optional<ppr::NodeId> source;
  std::uint64_t random_sources = 0;
  std::uint64_t seed = 0;
  std::optional<double> mu;
  std::uint64_t checkpoint_every = 0;
  std::string out_dir = ".";
  std::string name = "graph";
};

int run_bench(const CommonFlags& common, const BenchFlags& flags) {
  for (const auto& algo : flags.algos)
    if (!ppr::is_known_algo(algo)) throw UsageError("unknown algorithm: " + algo);
  const ppr::Graph g = load_graph(common.graph_path, common.undirected);

  std::vector<ppr::NodeId> sources;
  if (flags.source) {
    if (*flags.source >= g.n()) throw std::runtime_error("--source is out of range");
    sources = {*flags.source};
  } else if (flags.random_sources) {
    sources = ppr::sample_sources(g, flags.random_sources, flags.seed);
  } else {
    throw UsageError("one of --source or --random-sources is required");
  }

  ppr::SweepPlan plan;
  plan.algorithms = flags.algos;
  plan.lambdas = flags.lambdas.empty() ? std::vector<double>{ppr::default_lambda(g.m())}
                                       : flags.lambdas;
  plan.epsilons = flags.epsilons;
  plan.alpha = common.alpha;
  plan.mu = flags.mu;
  plan.checkpoint_every = flags.checkpoint_every;

  const ppr::SweepResult result = ppr::run_sweep(g, sources, plan);
  ppr::write_sweep_csv(result, flags.out_dir, flags.name);
  std::cout << "cells=" << result.cells.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-source personalized PageRank engine"};
  app.require_subcommand(1);

  CommonFlags common;

  auto* clean = app.add_subcommand("clean", "parse, clean and cache a graph");
  add_common(clean, common);
  std::string clean_out;
  clean->add_option("--out", clean_out, "output .pprg path")->required();

  auto* query = app.add_subcommand("query", "run one single-source query");
  add_common(query, common);
  QueryFlags qf;
  query->add_option("--algo", qf.algo)->required();
  query->add_option("--lambda", qf.lambda, "l1-error threshold (default min(1/m,1e-8))");
  query->add_option("--epsilon", qf.epsilon, "relative error (speedppr)");
  query->add_option("--mu", qf.mu, "PPR threshold (default 1/n)");
  query->add_option("--source", qf.source);
  query->add_option("--random-sources", qf.random_sources);
  query->add_option("--seed", qf.seed);
  query->add_option("--epochs", qf.epochs);
  query->add_option("--scan-threshold", qf.scan_threshold);
  query->add_option("--index", qf.index_path, "walk index path (speedppr)");
  query->add_option("--out", qf.out_path, "result csv path");

  auto* build = app.add_subcommand("build-index", "precompute the walk index");
  add_common(build, common);
  std::uint64_t build_seed = 0;
  std::string build_out;
  build->add_option("--seed", build_seed);
  build->add_option("--out", build_out)->required();

  auto* truth = app.add_subcommand("groundtruth", "reference answer at lambda=1e-17");
  add_common(truth, common);
  ppr::NodeId truth_source = 0;
  std::string truth_out;
  truth->add_option("--source", truth_source)->required();
  truth->add_option("--out", truth_out)->required();

  auto* bench = app.add_subcommand("bench", "parameter sweep with csv output");
  add_common(bench, common);
  BenchFlags bf;
  bench->add_option("--algo", bf.algos, "algorithm (repeatable)")->required();
  bench->add_option("--lambda", bf.lambdas, "lambda grid (repeatable)");
  bench->add_option("--epsilon", bf.epsilons, "epsilon grid (repeatable)");
  bench->add_option("--source", bf.source);
  bench->add_option("--random-sources", bf.random_sources);
  bench->add_option("--seed", bf.seed);
  bench->add_option("--mu", bf.mu);
  bench->add_option("--checkpoint-every", bf.checkpoint_every,
                    "edge pushes between checkpoints (default 4m)");
  bench->add_option("--out", bf.out_dir, "output directory");
  bench->add_option("--name", bf.name, "prefix for csv files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*clean) return run_clean(common, clean_out);
    if (*query) return run_query(common, qf);
    if (*build) return run_build_index(common, build_seed, build_out);
    if (*truth) return run_groundtruth(common, truth_source, truth_out);
    return run_bench(common, bf);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
