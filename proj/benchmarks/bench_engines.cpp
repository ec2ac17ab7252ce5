#include <benchmark/benchmark.h>

#include "ppr/push.hpp"
#include "ppr/speedppr.hpp"
#include "ppr/synthetic.hpp"
#include "ppr/walk_index.hpp"

namespace {

const ppr::Graph& bench_graph() {
  static const ppr::Graph g = ppr::random_graph(20000, 5, 15, 1);
  return g;
}

void BM_PowerIteration(benchmark::State& state) {
  const auto& g = bench_graph();
  const double lambda = std::pow(10.0, -state.range(0));
  for (auto _ : state) {
    auto out = ppr::power_iteration(g, 0, 0.2, lambda);
    benchmark::DoNotOptimize(out.estimates.data());
  }
}
BENCHMARK(BM_PowerIteration)->Arg(4)->Arg(8);

void BM_FifoForwardPush(benchmark::State& state) {
  const auto& g = bench_graph();
  const double lambda = std::pow(10.0, -state.range(0));
  const double r_max = lambda / static_cast<double>(g.m());
  for (auto _ : state) {
    auto out = ppr::fifo_forward_push(g, 0, 0.2, r_max);
    benchmark::DoNotOptimize(out.estimates.data());
  }
}
BENCHMARK(BM_FifoForwardPush)->Arg(4)->Arg(8);

void BM_PowerPush(benchmark::State& state) {
  const auto& g = bench_graph();
  const double lambda = std::pow(10.0, -state.range(0));
  ppr::QueryConfig cfg;
  for (auto _ : state) {
    auto out = ppr::power_push(g, 0, 0.2, lambda, cfg);
    benchmark::DoNotOptimize(out.estimates.data());
  }
}
BENCHMARK(BM_PowerPush)->Arg(4)->Arg(8);

void BM_BuildIndex(benchmark::State& state) {
  const auto& g = bench_graph();
  for (auto _ : state) {
    auto index = ppr::build_index(g, 0.2, 7);
    benchmark::DoNotOptimize(index.endpoint_count());
  }
}
BENCHMARK(BM_BuildIndex);

void BM_SpeedPPR(benchmark::State& state) {
  const auto& g = bench_graph();
  ppr::QueryConfig cfg;
  cfg.epsilon = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto out = ppr::speedppr_query(g, 0, cfg);
    benchmark::DoNotOptimize(out.estimates.data());
  }
}
BENCHMARK(BM_SpeedPPR)->Arg(2)->Arg(10);

void BM_SpeedPPRIndexed(benchmark::State& state) {
  const auto& g = bench_graph();
  static const ppr::WalkIndex index = ppr::build_index(g, 0.2, 7);
  ppr::QueryConfig cfg;
  cfg.epsilon = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto out = ppr::speedppr_query(g, 0, cfg, &index);
    benchmark::DoNotOptimize(out.estimates.data());
  }
}
BENCHMARK(BM_SpeedPPRIndexed)->Arg(2)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
