#pragma once

#include <span>
#include <string>
#include <vector>

#include "ppr/graph.hpp"
#include "ppr/rng.hpp"
#include "ppr/types.hpp"

namespace ppr {

// One alpha-random walk: stop at the current node with probability alpha,
// otherwise move to a uniform effective out-neighbor (dead-ends jump back to
// source). Returns the terminal node; expected length is at most 1/alpha.
NodeId random_walk(const Graph& g, NodeId start, NodeId source, double alpha, Rng& rng);

// Precomputed walk terminals, exactly out_degree(v) per node (so at most m in
// total), independent of any query parameter. Walks stored for v were started
// at v with v itself standing in for the unknown query source at dead-ends.
class WalkIndex {
 public:
  WalkIndex(double alpha, std::uint64_t seed, std::uint8_t rng_id,
            std::vector<std::uint64_t> offsets, std::vector<NodeId> endpoints);

  double alpha() const { return alpha_; }
  std::uint64_t seed() const { return seed_; }
  std::uint8_t rng_id() const { return rng_id_; }
  NodeId node_count() const { return static_cast<NodeId>(offsets_.size() - 1); }
  EdgeId endpoint_count() const { return endpoints_.size(); }

  std::span<const NodeId> endpoints_of(NodeId v) const {
    return {endpoints_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  // Throws when the index shape does not match the graph.
  void check_compatible(const Graph& g) const;

 private:
  double alpha_;
  std::uint64_t seed_;
  std::uint8_t rng_id_;
  std::vector<std::uint64_t> offsets_;  // length n+1, slice v has out_degree(v) entries
  std::vector<NodeId> endpoints_;
};

// Simulate out_degree(v) walks from every node, in id order, from one seeded
// generator. Same seed, same graph: byte-identical index.
WalkIndex build_index(const Graph& g, double alpha, std::uint64_t seed);

// Index file, magic "PPRW" version 1:
//   magic[4], version u8, rng-id u8, alpha f64 LE, seed u64 LE,
//   n u64 LE, m u64 LE, offsets (n+1)*u64 LE, endpoints m*u32 LE
void save_index(const WalkIndex& index, const std::string& path);
WalkIndex load_index(const std::string& path);

}  // namespace ppr
