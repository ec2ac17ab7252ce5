#pragma once

#include <cstdint>

#include "ppr/graph.hpp"
#include "ppr/push.hpp"
#include "ppr/rng.hpp"
#include "ppr/types.hpp"
#include "ppr/walk_index.hpp"

namespace ppr {

// Chernoff walk budget W = 2*(2*eps/3 + 2)*ln(n) / (eps^2 * mu), rounded up.
// Natural logarithm; requires n >= 2 so the budget is positive.
double walk_budget_real(std::uint64_t n, double epsilon, double mu);
std::uint64_t compute_walk_budget(std::uint64_t n, double epsilon, double mu);

// Monte Carlo phase over a refined push state: every node v with residue
// r > 0 performs ceil(r*W) walks, each terminal collecting r/ceil(r*W).
// Requires r <= effective_degree(v)/W (the post-refinement condition), which
// caps the walks from v at its degree. The residue mass is fully reassigned,
// so the result sums to sum(reserve) + sum(residue).
PPRVector monte_carlo_phase(const Graph& g, NodeId s, double alpha, PushState&& state,
                            std::uint64_t walk_budget, Rng& rng);

// Same, but walks from v consume the first ceil(r*W) stored terminals of v.
// Dead-ends have no stored walks (their walks depend on the source) and fall
// back to fresh ones from rng. Rejects an index built for a different alpha.
PPRVector monte_carlo_phase(const Graph& g, NodeId s, double alpha, PushState&& state,
                            std::uint64_t walk_budget, const WalkIndex& index, Rng& rng);

// Approximate single-source query: power_push down to lambda = m/W, a
// refinement pass to r_max = 1/W, then the Monte Carlo phase. When W <= m the
// push phase cannot beat plain sampling and the query runs W walks from s
// directly. With probability >= 1 - 1/n every node with pi >= mu gets
// relative error at most epsilon. cfg.epsilon is required.
PPRVector speedppr_query(const Graph& g, NodeId s, const QueryConfig& cfg,
                         const WalkIndex* index = nullptr);

}  // namespace ppr
