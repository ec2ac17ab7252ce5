#include "ppr/speedppr.hpp"

#include <cmath>
#include <stdexcept>

namespace ppr {

double walk_budget_real(std::uint64_t n, double epsilon, double mu) {
  if (n < 2) throw std::invalid_argument("walk budget: need n >= 2");
  if (!(epsilon > 0.0)) throw std::invalid_argument("walk budget: epsilon must be positive");
  if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("walk budget: mu must be in (0,1]");
  return 2.0 * (2.0 * epsilon / 3.0 + 2.0) * std::log(static_cast<double>(n)) /
         (epsilon * epsilon * mu);
}

std::uint64_t compute_walk_budget(std::uint64_t n, double epsilon, double mu) {
  return static_cast<std::uint64_t>(std::ceil(walk_budget_real(n, epsilon, mu)));
}

namespace {

// WalkFn(v, k) yields the terminal of the k-th walk out of v.
template <typename WalkFn>
PPRVector run_monte_carlo(const Graph& g, NodeId s, double alpha, PushState&& st,
                          std::uint64_t walk_budget, WalkFn&& walk) {
  const double budget = static_cast<double>(walk_budget);
  std::uint64_t walks = 0;
  for (NodeId v = 0; v < g.n(); ++v) {
    const double r = st.residue[v];
    if (r <= 0.0) continue;
    const std::uint64_t degree = effective_degree(g, v);
    auto walk_count = static_cast<std::uint64_t>(std::ceil(r * budget));
    if (walk_count > degree) {
      // r <= degree/W up to rounding of the threshold products; anything
      // beyond a few ulps means the state was not refined to r_max = 1/W.
      if (r * budget > static_cast<double>(degree) * (1.0 + 1e-9) + 1e-9)
        throw std::logic_error("monte carlo: residue exceeds degree/W, state not refined");
      walk_count = degree;
    }
    const double contribution = r / static_cast<double>(walk_count);
    for (std::uint64_t k = 0; k < walk_count; ++k)
      st.reserve[walk(v, k)] += contribution;
    walks += walk_count;
    st.residue[v] = 0.0;
  }
  st.r_sum = 0.0;
  PPRVector out = finish_state(std::move(st), s, alpha);
  out.walks = walks;
  return out;
}

}  // namespace

PPRVector monte_carlo_phase(const Graph& g, NodeId s, double alpha, PushState&& state,
                            std::uint64_t walk_budget, Rng& rng) {
  return run_monte_carlo(g, s, alpha, std::move(state), walk_budget,
                         [&](NodeId v, std::uint64_t) { return random_walk(g, v, s, alpha, rng); });
}

PPRVector monte_carlo_phase(const Graph& g, NodeId s, double alpha, PushState&& state,
                            std::uint64_t walk_budget, const WalkIndex& index, Rng& rng) {
  index.check_compatible(g);
  if (index.alpha() != alpha)
    throw std::runtime_error("walk index was built for a different alpha");
  return run_monte_carlo(g, s, alpha, std::move(state), walk_budget,
                         [&](NodeId v, std::uint64_t k) {
                           const auto stored = index.endpoints_of(v);
                           if (stored.empty())  // dead-end: source-dependent walk
                             return random_walk(g, v, s, alpha, rng);
                           return stored[k];
                         });
}

PPRVector speedppr_query(const Graph& g, NodeId s, const QueryConfig& cfg,
                         const WalkIndex* index) {
  cfg.validate();
  if (!cfg.epsilon) throw std::invalid_argument("speedppr: epsilon is required");
  if (s >= g.n()) throw std::invalid_argument("speedppr: source out of range");
  if (index) {
    index->check_compatible(g);
    if (index->alpha() != cfg.alpha)
      throw std::runtime_error("walk index was built for a different alpha");
  }

  const double mu = cfg.mu_for(g.n());
  const std::uint64_t walk_budget = compute_walk_budget(g.n(), *cfg.epsilon, mu);
  Rng rng(cfg.seed);

  const EdgeId m_eff = g.effective_edge_count();
  if (walk_budget <= m_eff) {
    // The push phase costs at least O(m); plain sampling is already cheaper.
    PPRVector out;
    out.estimates.assign(g.n(), 0.0);
    out.residues.assign(g.n(), 0.0);
    out.source = s;
    out.alpha = cfg.alpha;
    const double contribution = 1.0 / static_cast<double>(walk_budget);
    for (std::uint64_t k = 0; k < walk_budget; ++k)
      out.estimates[random_walk(g, s, s, cfg.alpha, rng)] += contribution;
    out.walks = walk_budget;
    return out;
  }

  const double lambda = static_cast<double>(m_eff) / static_cast<double>(walk_budget);
  PushState st = power_push_state(g, s, cfg.alpha, lambda, cfg);
  const double r_max = 1.0 / static_cast<double>(walk_budget);
  refine(g, s, cfg.alpha, r_max, st);
  if (index)
    return monte_carlo_phase(g, s, cfg.alpha, std::move(st), walk_budget, *index, rng);
  return monte_carlo_phase(g, s, cfg.alpha, std::move(st), walk_budget, rng);
}

}  // namespace ppr
