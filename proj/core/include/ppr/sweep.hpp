#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ppr/graph.hpp"
#include "ppr/push.hpp"
#include "ppr/types.hpp"

namespace ppr {

// Names accepted by the sweep harness and the query front end.
inline constexpr const char* kAlgoPowItr = "powitr";
inline constexpr const char* kAlgoFifoFwdPush = "fwdpush-fifo";
inline constexpr const char* kAlgoSimFwdPush = "simfwdpush";
inline constexpr const char* kAlgoPowerPush = "powerpush";
inline constexpr const char* kAlgoSpeedPPR = "speedppr";

bool is_high_precision_algo(const std::string& name);
bool is_known_algo(const std::string& name);

// Checkpoint of a running high-precision query, sampled on a fixed cadence
// of edge pushes.
struct Checkpoint {
  std::uint64_t pushes = 0;
  double r_sum = 0.0;
  std::uint64_t time_ns = 0;
};

// Observer that records a checkpoint every `cadence` edge pushes.
class CheckpointRecorder : public PushObserver {
 public:
  explicit CheckpointRecorder(std::uint64_t cadence);
  void on_push(const PushState& st) override;
  const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }

 private:
  std::uint64_t cadence_;
  std::uint64_t next_mark_;
  std::chrono::steady_clock::time_point started_;
  std::vector<Checkpoint> checkpoints_;
};

struct SweepPlan {
  std::vector<std::string> algorithms;
  std::vector<double> lambdas;    // grid for the high-precision engines
  std::vector<double> epsilons;   // grid for speedppr
  std::vector<std::uint64_t> seeds = {0};  // speedppr runs one row per seed
  double alpha = kDefaultAlpha;
  std::optional<double> mu;                // 1/n when unset
  std::uint64_t checkpoint_every = 0;      // edge pushes; 0 means 4*m
};

struct SweepRow {
  NodeId source = 0;
  std::string algo;
  double param = 0.0;  // lambda or epsilon
  std::uint64_t wall_time_ns = 0;
  std::uint64_t edge_pushes = 0;
  std::uint64_t walks = 0;
  double l1_error = 0.0;
  double max_rel_error = 0.0;
};

struct SweepCell {
  SweepRow row;
  std::vector<Checkpoint> checkpoints;  // high-precision cells only
};

struct SweepResult {
  std::vector<SweepCell> cells;
};

// Run every (source, algorithm, parameter) cell against ground truth
// (power_push at lambda = 1e-17, computed once per source). Throws on an
// unknown algorithm name.
SweepResult run_sweep(const Graph& g, const std::vector<NodeId>& sources,
                      const SweepPlan& plan);

// Summary goes to {graph}_sweep.csv, one checkpoint file per high-precision
// cell named {graph}_{algo}_{param}.csv, all under directory.
void write_sweep_csv(const SweepResult& result, const std::string& directory,
                     const std::string& graph_name);

// Uniform source sample over [0, n) from the seeded generator.
std::vector<NodeId> sample_sources(const Graph& g, std::uint64_t count, std::uint64_t seed);

}  // namespace ppr
