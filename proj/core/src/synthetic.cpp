#include "ppr/synthetic.hpp"

#include <stdexcept>

#include "ppr/rng.hpp"

namespace ppr {

Graph random_graph(NodeId n, std::uint32_t min_out, std::uint32_t max_out,
                   std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_graph: need at least one node");
  if (min_out > max_out) throw std::invalid_argument("random_graph: min_out > max_out");
  Rng rng(seed);
  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::vector<NodeId> degrees(n);
  for (NodeId v = 0; v < n; ++v) {
    degrees[v] = min_out + static_cast<NodeId>(rng.below(max_out - min_out + 1));
    offsets[v + 1] = offsets[v] + degrees[v];
  }
  std::vector<NodeId> neighbors;
  neighbors.reserve(offsets[n]);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId k = 0; k < degrees[v]; ++k)
      neighbors.push_back(static_cast<NodeId>(rng.below(n)));
  return Graph(std::move(offsets), std::move(neighbors));
}

}  // namespace ppr
