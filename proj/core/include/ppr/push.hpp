#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ppr/graph.hpp"
#include "ppr/types.hpp"

namespace ppr {

// FIFO queue of node ids backed by a ring buffer. A node is in the queue at
// most once (callers gate appends on the in_queue flags), so capacity n+1
// never overflows.
class FifoQueue {
 public:
  explicit FifoQueue(std::size_t n) : buf_(n + 1) {}

  bool empty() const { return head_ == tail_; }
  std::size_t size() const {
    return tail_ >= head_ ? tail_ - head_ : buf_.size() - head_ + tail_;
  }
  void push(NodeId v) {
    buf_[tail_] = v;
    tail_ = next(tail_);
  }
  NodeId pop() {
    const NodeId v = buf_[head_];
    head_ = next(head_);
    return v;
  }
  void clear() { head_ = tail_ = 0; }

 private:
  std::size_t next(std::size_t i) const { return i + 1 == buf_.size() ? 0 : i + 1; }
  std::vector<NodeId> buf_;
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
};

// Working state of a push computation. Invariants, up to float tolerance:
// reserve and residue entrywise >= 0, sum(reserve) + sum(residue) == 1,
// r_sum tracks sum(residue), in_queue[v] iff v is queued.
struct PushState {
  std::vector<double> reserve;
  std::vector<double> residue;
  double r_sum = 0.0;
  std::vector<std::uint8_t> in_queue;
  FifoQueue queue;
  std::uint64_t edge_push_count = 0;

  PushState(NodeId n, NodeId s)
      : reserve(n, 0.0), residue(n, 0.0), r_sum(1.0), in_queue(n, 0), queue(n) {
    residue[s] = 1.0;
  }

  // Incremental r_sum drifts; refresh it from the residues at iteration and
  // epoch boundaries. A gap above 1e-6 means a bookkeeping bug.
  void recompute_r_sum();
};

// Observation hook for instrumentation and tests. on_push fires after each
// completed push operation; on_iteration after each iteration of the
// double-buffered engines (their only consistent interruption points).
class PushObserver {
 public:
  virtual ~PushObserver() = default;
  virtual void on_push(const PushState&) {}
  virtual void on_iteration(const PushState&, std::uint32_t /*iteration*/) {}
};

// One push on v: alpha * r settles into the reserve, the rest spreads evenly
// over the effective out-neighbors. The residue is zeroed before the spread,
// so a self-loop (or a dead-end source) re-accumulates instead of vanishing.
// No-op when residue[v] <= 0.
void push_once(PushState& state, NodeId v, const Graph& g, NodeId s, double alpha);

// Global approach: dense iterates pi += alpha*gamma, gamma <- (1-alpha)*gamma*P,
// scanning every adjacency list per iteration, until ||gamma||_1 <= lambda.
PPRVector power_iteration(const Graph& g, NodeId s, double alpha, double lambda,
                          PushObserver* observer = nullptr);

// Forward push with r_max = 0 and snapshot semantics: every node with nonzero
// residue pushes simultaneously (double buffering), one iteration per round.
// Produces exactly the power_iteration iterates.
PPRVector sim_forward_push(const Graph& g, NodeId s, double alpha, double lambda,
                           PushObserver* observer = nullptr);

// Forward push driven by a FIFO queue of active nodes (residue > degree*r_max,
// dead-ends use effective degree 1). Natural stop leaves every node inactive;
// lambda_stop, when given, ends the drain early once r_sum <= lambda_stop.
PPRVector fifo_forward_push(const Graph& g, NodeId s, double alpha, double r_max,
                            std::optional<double> lambda_stop = std::nullopt,
                            PushObserver* observer = nullptr);

// Optional trace of the scan phase, for tests and instrumentation.
struct PowerPushTrace {
  bool used_scan_phase = false;
  std::vector<double> epoch_r_max;  // threshold per epoch, lambda^(i/epochNum)/m
};

// Hybrid engine: queue-driven pushes while the active set is small, then
// id-ordered sequential scans with geometrically tightening thresholds
// (epoch i uses lambda^(i/epochNum)) until r_sum <= lambda.
PPRVector power_push(const Graph& g, NodeId s, double alpha, double lambda,
                     const QueryConfig& cfg, PushObserver* observer = nullptr,
                     PowerPushTrace* trace = nullptr);

// power_push returning the raw state, for callers that keep pushing (the
// approximate-query pipeline refines and then runs walks on it).
PushState power_push_state(const Graph& g, NodeId s, double alpha, double lambda,
                           const QueryConfig& cfg, PushObserver* observer = nullptr,
                           PowerPushTrace* trace = nullptr);

// FIFO pushes until no node is active w.r.t. r_max; afterwards every node
// satisfies residue[v] <= effective_degree(v) * r_max. O(m) from a state with
// r_sum <= m * r_max.
void refine(const Graph& g, NodeId s, double alpha, double r_max, PushState& state,
            PushObserver* observer = nullptr);

// Move a finished state into a query result.
PPRVector finish_state(PushState&& state, NodeId source, double alpha);

}  // namespace ppr
