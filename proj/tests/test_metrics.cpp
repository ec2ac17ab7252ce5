#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "ppr/csv.hpp"
#include "ppr/exact_ppr.hpp"
#include "ppr/metrics.hpp"
#include "ppr/push.hpp"
#include "ppr/sweep.hpp"
#include "ppr/synthetic.hpp"
#include "testutil.hpp"

using namespace ppr;

TEST_CASE("l1_error basics") {
  const std::vector<double> truth = {0.5, 0.3, 0.2};
  CHECK(l1_error(std::span<const double>(truth), std::span<const double>(truth)) == 0.0);
  const std::vector<double> zero(3, 0.0);
  CHECK(l1_error(std::span<const double>(zero), std::span<const double>(truth)) ==
        doctest::Approx(1.0));
  const std::vector<double> short_vec = {1.0};
  CHECK_THROWS_AS(l1_error(std::span<const double>(short_vec),
                           std::span<const double>(truth)),
                  std::invalid_argument);

  PPRVector a, b;
  a.estimates = truth;
  b.estimates = truth;
  a.source = 0;
  b.source = 1;
  CHECK_THROWS_AS(l1_error(a, b), std::invalid_argument);
}

TEST_CASE("power iteration error against the oracle is (1-alpha)^j") {
  const Graph g = test::five_node_graph();
  const DensePPR exact = exact_ppr(g, 0, 0.2);

  struct Trace : PushObserver {
    const std::vector<double>* truth = nullptr;
    std::vector<double> errors;
    void on_iteration(const PushState& st, std::uint32_t) override {
      double err = 0.0;
      for (std::size_t v = 0; v < st.reserve.size(); ++v)
        err += std::abs(st.reserve[v] - (*truth)[v]);
      errors.push_back(err);
    }
  } trace;
  trace.truth = &exact.pi;
  power_iteration(g, 0, 0.2, 1e-9, &trace);
  for (std::size_t j = 1; j <= trace.errors.size(); ++j)
    CHECK(std::abs(trace.errors[j - 1] - std::pow(0.8, j)) < 1e-10);
}

TEST_CASE("compare_to_truth counts violations above mu only") {
  const std::vector<double> truth = {0.5, 0.3, 0.15, 0.05};
  const std::vector<double> est = {0.5, 0.45, 0.15, 0.2};
  const ErrorReport report = compare_to_truth(est, truth, 0.1, 0.2);
  CHECK(report.nodes_above_mu == 3);
  CHECK(report.violations == 1);  // node 1 is off by 50%
  CHECK(report.max_rel_above_mu == doctest::Approx(0.5));
  CHECK(report.l1 == doctest::Approx(0.3));
}

TEST_CASE("ground truth matches the dense solve and is deterministic") {
  const Graph g = test::five_node_graph();
  const PPRVector a = ground_truth(g, 0, 0.2);
  const PPRVector b = ground_truth(g, 0, 0.2);
  CHECK(a.estimates == b.estimates);
  CHECK(test::l1_diff(a.estimates, test::five_node_pi0()) <= 1e-12);
  double total = 0.0;
  for (double x : a.estimates) total += x;
  CHECK(std::abs(total - 1.0) <= 1e-12);
  CHECK(a.achieved_r_sum <= kGroundTruthLambda);
}

TEST_CASE("ground truth works on graphs with dead ends") {
  const Graph g = random_graph(50, 0, 3, 71);
  REQUIRE(!g.dead_ends().empty());
  const PPRVector out = ground_truth(g, 7, 0.2);
  CHECK(out.achieved_r_sum <= kGroundTruthLambda);
}

TEST_CASE("ppr csv round-trips 17 significant digits") {
  const std::vector<double> values = {0.29366106080206994, 1e-17, 0.0,
                                      2.0 / 3.0, 5.4333764553686985e-2};
  const auto path = test::temp_path("vals.csv");
  write_ppr_csv(path, values);
  const std::vector<double> back = read_ppr_csv(path);
  CHECK(back == values);
  std::remove(path.c_str());
}

TEST_CASE("sweep: one source, one algo, one lambda gives exactly one row") {
  const Graph g = test::five_node_graph();
  SweepPlan plan;
  plan.algorithms = {kAlgoPowerPush};
  plan.lambdas = {1e-6};
  const SweepResult result = run_sweep(g, {0}, plan);
  REQUIRE(result.cells.size() == 1);
  const SweepRow& row = result.cells[0].row;
  CHECK(row.source == 0);
  CHECK(row.algo == kAlgoPowerPush);
  CHECK(row.param == 1e-6);
  CHECK(row.l1_error <= 1e-6);
  CHECK(row.walks == 0);
}

TEST_CASE("sweep rejects unknown algorithm names") {
  const Graph g = test::five_node_graph();
  SweepPlan plan;
  plan.algorithms = {"bfs"};
  plan.lambdas = {1e-4};
  CHECK_THROWS_AS(run_sweep(g, {0}, plan), std::invalid_argument);
}

TEST_CASE("sweep: edge pushes grow monotonically as lambda shrinks") {
  const Graph g = random_graph(200, 1, 4, 81);
  SweepPlan plan;
  plan.algorithms = {kAlgoFifoFwdPush};
  plan.lambdas = {1e-2, 1e-4, 1e-6, 1e-8};
  const SweepResult result = run_sweep(g, {3}, plan);
  REQUIRE(result.cells.size() == 4);
  for (std::size_t i = 1; i < 4; ++i)
    CHECK(result.cells[i].row.edge_pushes >= result.cells[i - 1].row.edge_pushes);
}

TEST_CASE("sweep rows are consistent with the residue mass") {
  const Graph g = random_graph(150, 1, 4, 83);
  SweepPlan plan;
  plan.algorithms = {kAlgoPowItr, kAlgoFifoFwdPush, kAlgoPowerPush};
  plan.lambdas = {1e-5};
  const SweepResult result = run_sweep(g, {11}, plan);
  for (const auto& cell : result.cells) {
    // the reserve underestimates pointwise, so l1 error equals leftover mass
    PPRVector rerun;
    if (cell.row.algo == kAlgoPowItr) {
      rerun = power_iteration(g, 11, plan.alpha, 1e-5);
    } else if (cell.row.algo == kAlgoFifoFwdPush) {
      rerun = fifo_forward_push(
          g, 11, plan.alpha, 1e-5 / static_cast<double>(g.effective_edge_count()));
    } else {
      QueryConfig cfg;
      rerun = power_push(g, 11, plan.alpha, 1e-5, cfg);
    }
    CHECK(cell.row.l1_error <= rerun.achieved_r_sum + 1e-9);
  }
}

TEST_CASE("sweep checkpoints sample r_sum on the push cadence") {
  const Graph g = random_graph(300, 2, 5, 85);
  SweepPlan plan;
  plan.algorithms = {kAlgoPowItr};
  plan.lambdas = {1e-10};
  plan.checkpoint_every = g.m();  // tighten the cadence for the test
  const SweepResult result = run_sweep(g, {0}, plan);
  REQUIRE(result.cells.size() == 1);
  const auto& checkpoints = result.cells[0].checkpoints;
  REQUIRE(checkpoints.size() >= 3);
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    CHECK(checkpoints[i].pushes > checkpoints[i - 1].pushes);
    CHECK(checkpoints[i].r_sum <= checkpoints[i - 1].r_sum);
  }
}

TEST_CASE("sweep csv files land under the requested names") {
  namespace fs = std::filesystem;
  const Graph g = test::five_node_graph();
  SweepPlan plan;
  plan.algorithms = {kAlgoPowerPush, kAlgoSpeedPPR};
  plan.lambdas = {1e-4};
  plan.epsilons = {0.5};
  plan.checkpoint_every = 4;  // tiny graph, force some checkpoints
  const SweepResult result = run_sweep(g, {0}, plan);
  const std::string dir = test::temp_path("sweep_out");
  write_sweep_csv(result, dir, "example");
  CHECK(fs::exists(fs::path(dir) / "example_sweep.csv"));
  CHECK(fs::exists(fs::path(dir) / "example_powerpush_0.0001.csv"));

  std::ifstream summary(fs::path(dir) / "example_sweep.csv");
  std::string header;
  std::getline(summary, header);
  CHECK(header == "source,algo,param,wall_time_ns,edge_pushes,walks,l1_error,max_rel_error");
  fs::remove_all(dir);
}

TEST_CASE("sampled sources are reproducible and in range") {
  const Graph g = random_graph(500, 1, 3, 87);
  const auto a = sample_sources(g, 30, 4242);
  const auto b = sample_sources(g, 30, 4242);
  CHECK(a == b);
  CHECK(a.size() == 30);
  for (NodeId s : a) CHECK(s < g.n());
  const auto c = sample_sources(g, 30, 4243);
  CHECK(a != c);
}
