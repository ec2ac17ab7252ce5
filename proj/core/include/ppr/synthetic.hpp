#pragma once

#include "ppr/graph.hpp"
#include "ppr/types.hpp"

namespace ppr {

// Seeded random digraph: every node draws an out-degree uniformly from
// [min_out, max_out] and picks that many uniform targets (self-loops and
// duplicates possible). min_out = 0 permits dead-ends. Deterministic.
Graph random_graph(NodeId n, std::uint32_t min_out, std::uint32_t max_out,
                   std::uint64_t seed);

}  // namespace ppr
