#include "ppr/push.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ppr {

void PushState::recompute_r_sum() {
  double total = 0.0;
  for (double r : residue) total += r;
  if (std::abs(total - r_sum) > 1e-6)
    throw std::logic_error("push: r_sum drifted more than 1e-6 from the residues");
  r_sum = total;
}

void push_once(PushState& state, NodeId v, const Graph& g, NodeId s, double alpha) {
  const double r = state.residue[v];
  if (r <= 0.0) return;
  state.reserve[v] += alpha * r;
  state.residue[v] = 0.0;
  const auto out = effective_out(g, v, s);
  const double share = (1.0 - alpha) * r / static_cast<double>(out.degree());
  for (NodeId u : out) state.residue[u] += share;
  state.r_sum -= alpha * r;
  state.edge_push_count += out.degree();
}

namespace {

// Pop-and-push until the queue empties, the queue outgrows queue_limit, or
// r_sum falls to lambda_stop (checked before every pop, matching the
// pseudo-code loop conditions). Newly active nodes are appended once.
void drain_queue(const Graph& g, NodeId s, double alpha, double r_max,
                 std::optional<double> lambda_stop, std::size_t queue_limit,
                 PushState& st, PushObserver* observer) {
  while (!st.queue.empty() && st.queue.size() <= queue_limit) {
    if (lambda_stop && st.r_sum <= *lambda_stop) break;
    const NodeId v = st.queue.pop();
    st.in_queue[v] = 0;
    const double r = st.residue[v];
    if (r <= 0.0) continue;
    st.reserve[v] += alpha * r;
    st.residue[v] = 0.0;
    const auto out = effective_out(g, v, s);
    const double share = (1.0 - alpha) * r / static_cast<double>(out.degree());
    for (NodeId u : out) {
      st.residue[u] += share;
      if (!st.in_queue[u] &&
          st.residue[u] > static_cast<double>(effective_degree(g, u)) * r_max) {
        st.in_queue[u] = 1;
        st.queue.push(u);
      }
    }
    st.r_sum -= alpha * r;
    st.edge_push_count += out.degree();
    if (observer) observer->on_push(st);
  }
}

void seed_source(const Graph& g, NodeId s, double r_max, PushState& st) {
  if (st.residue[s] > static_cast<double>(effective_degree(g, s)) * r_max) {
    st.in_queue[s] = 1;
    st.queue.push(s);
  }
}

}  // namespace

PPRVector finish_state(PushState&& state, NodeId source, double alpha) {
  PPRVector out;
  out.estimates = std::move(state.reserve);
  out.residues = std::move(state.residue);
  out.source = source;
  out.alpha = alpha;
  out.achieved_r_sum = state.r_sum;
  out.pushes = state.edge_push_count;
  return out;
}

PPRVector power_iteration(const Graph& g, NodeId s, double alpha, double lambda,
                          PushObserver* observer) {
  const NodeId n = g.n();
  PushState st(n, s);
  std::vector<double> next(n, 0.0);
  std::uint32_t iteration = 0;
  while (st.r_sum > lambda) {
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId v = 0; v < n; ++v) {
      const double r = st.residue[v];
      st.reserve[v] += alpha * r;
      const auto out = effective_out(g, v, s);
      const double share = (1.0 - alpha) * r / static_cast<double>(out.degree());
      for (NodeId u : out) next[u] += share;
      st.edge_push_count += out.degree();
    }
    st.residue.swap(next);
    double total = 0.0;
    for (double r : st.residue) total += r;
    st.r_sum = total;
    ++iteration;
    if (observer) {
      observer->on_push(st);
      observer->on_iteration(st, iteration);
    }
  }
  return finish_state(std::move(st), s, alpha);
}

PPRVector sim_forward_push(const Graph& g, NodeId s, double alpha, double lambda,
                           PushObserver* observer) {
  const NodeId n = g.n();
  PushState st(n, s);
  std::vector<double> next(n, 0.0);
  std::uint32_t iteration = 0;
  while (st.r_sum > lambda) {
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId v = 0; v < n; ++v) {
      const double r = st.residue[v];
      if (r == 0.0) continue;  // r_max = 0: every nonzero residue is active
      st.reserve[v] += alpha * r;
      const auto out = effective_out(g, v, s);
      const double share = (1.0 - alpha) * r / static_cast<double>(out.degree());
      for (NodeId u : out) next[u] += share;
      st.edge_push_count += out.degree();
    }
    st.residue.swap(next);
    double total = 0.0;
    for (double r : st.residue) total += r;
    st.r_sum = total;
    ++iteration;
    if (observer) {
      observer->on_push(st);
      observer->on_iteration(st, iteration);
    }
  }
  return finish_state(std::move(st), s, alpha);
}

PPRVector fifo_forward_push(const Graph& g, NodeId s, double alpha, double r_max,
                            std::optional<double> lambda_stop, PushObserver* observer) {
  if (!(r_max > 0.0)) throw std::invalid_argument("fifo_forward_push: r_max must be positive");
  PushState st(g.n(), s);
  seed_source(g, s, r_max, st);
  drain_queue(g, s, alpha, r_max, lambda_stop, std::numeric_limits<std::size_t>::max(),
              st, observer);
  st.recompute_r_sum();
  return finish_state(std::move(st), s, alpha);
}

PushState power_push_state(const Graph& g, NodeId s, double alpha, double lambda,
                           const QueryConfig& cfg, PushObserver* observer,
                           PowerPushTrace* trace) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::invalid_argument("power_push: lambda must be in (0,1]");
  const NodeId n = g.n();
  // The activity scale counts the conceptual dead-end edges so inactive
  // residues total at most lambda; on dead-end-free graphs this is lambda/m.
  const double m_eff = static_cast<double>(g.effective_edge_count());
  const double r_max = lambda / m_eff;
  const std::uint64_t scan_threshold = cfg.scan_threshold_for(n);

  PushState st(n, s);
  seed_source(g, s, r_max, st);
  drain_queue(g, s, alpha, r_max, lambda, scan_threshold, st, observer);
  st.recompute_r_sum();

  if (st.r_sum > lambda) {
    // Switch to sequential scans; the queue is discarded, the scans find
    // every active node regardless.
    st.queue.clear();
    std::fill(st.in_queue.begin(), st.in_queue.end(), 0);
    if (trace) trace->used_scan_phase = true;
    for (std::uint32_t epoch = 1; epoch <= cfg.epoch_num; ++epoch) {
      // Larger l1-error allowed early: epoch i pushes only the nodes with
      // unit-cost benefit above lambda^(i/epochNum)/m.
      const double epoch_lambda =
          std::pow(lambda, static_cast<double>(epoch) / cfg.epoch_num);
      const double epoch_r_max = epoch_lambda / m_eff;
      if (trace) trace->epoch_r_max.push_back(epoch_r_max);
      while (st.r_sum > epoch_lambda) {
        for (NodeId v = 0; v < n; ++v) {
          const double r = st.residue[v];
          if (r <= static_cast<double>(effective_degree(g, v)) * epoch_r_max) continue;
          st.reserve[v] += alpha * r;
          st.residue[v] = 0.0;
          const auto out = effective_out(g, v, s);
          const double share = (1.0 - alpha) * r / static_cast<double>(out.degree());
          for (NodeId u : out) st.residue[u] += share;
          st.r_sum -= alpha * r;
          st.edge_push_count += out.degree();
          if (observer) observer->on_push(st);
        }
        st.recompute_r_sum();
      }
    }
  }
  return st;
}

PPRVector power_push(const Graph& g, NodeId s, double alpha, double lambda,
                     const QueryConfig& cfg, PushObserver* observer,
                     PowerPushTrace* trace) {
  PushState st = power_push_state(g, s, alpha, lambda, cfg, observer, trace);
  return finish_state(std::move(st), s, alpha);
}

void refine(const Graph& g, NodeId s, double alpha, double r_max, PushState& state,
            PushObserver* observer) {
  if (!(r_max > 0.0)) throw std::invalid_argument("refine: r_max must be positive");
  state.queue.clear();
  std::fill(state.in_queue.begin(), state.in_queue.end(), 0);
  for (NodeId v = 0; v < g.n(); ++v) {
    if (state.residue[v] > static_cast<double>(effective_degree(g, v)) * r_max) {
      state.in_queue[v] = 1;
      state.queue.push(v);
    }
  }
  drain_queue(g, s, alpha, r_max, std::nullopt,
              std::numeric_limits<std::size_t>::max(), state, observer);
  state.recompute_r_sum();
}

}  // namespace ppr
