#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ppr/types.hpp"

namespace ppr {

// Immutable directed graph in CSR form: adjacency lists concatenated in
// ascending node-id order so a pass over all edges is one sequential scan.
// Node ids are dense in [0, n) after cleaning. Safe to share across threads.
class Graph {
 public:
  Graph(std::vector<std::uint64_t> out_offsets, std::vector<NodeId> out_neighbors);

  NodeId n() const { return n_; }
  EdgeId m() const { return m_; }

  EdgeId out_degree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  bool is_dead_end(NodeId v) const { return out_degree(v) == 0; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {out_neighbors_.data() + out_offsets_[v],
            static_cast<std::size_t>(out_degree(v))};
  }

  const std::vector<std::uint64_t>& out_offsets() const { return out_offsets_; }
  const std::vector<NodeId>& out_neighbors() const { return out_neighbors_; }
  const std::vector<NodeId>& dead_ends() const { return dead_ends_; }

  // m plus one conceptual edge per dead-end (its jump back to the source).
  // This is the edge total of the graph every algorithm actually walks on.
  EdgeId effective_edge_count() const { return m_ + dead_ends_.size(); }

  void validate() const;  // throws std::runtime_error on a broken invariant

 private:
  NodeId n_ = 0;
  EdgeId m_ = 0;
  std::vector<std::uint64_t> out_offsets_;  // length n+1, non-decreasing
  std::vector<NodeId> out_neighbors_;       // length m
  std::vector<NodeId> dead_ends_;           // ascending ids with out-degree 0
};

// Out-neighbors of v with the dead-end convention applied: a node without
// out-edges behaves as if it had a single edge back to the query source.
class EffectiveOut {
 public:
  EffectiveOut(std::span<const NodeId> neighbors, NodeId source)
      : neighbors_(neighbors), source_(source) {}

  std::uint64_t degree() const { return neighbors_.empty() ? 1 : neighbors_.size(); }
  NodeId operator[](std::uint64_t i) const {
    return neighbors_.empty() ? source_ : neighbors_[i];
  }

  class iterator {
   public:
    iterator(const EffectiveOut* eo, std::uint64_t i) : eo_(eo), i_(i) {}
    NodeId operator*() const { return (*eo_)[i_]; }
    iterator& operator++() { ++i_; return *this; }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }
   private:
    const EffectiveOut* eo_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, degree()}; }

 private:
  std::span<const NodeId> neighbors_;
  NodeId source_;
};

inline EffectiveOut effective_out(const Graph& g, NodeId v, NodeId source) {
  return {g.neighbors(v), source};
}

inline std::uint64_t effective_degree(const Graph& g, NodeId v) {
  const EdgeId d = g.out_degree(v);
  return d == 0 ? 1 : d;
}

// Build from raw (src, dst) pairs with original (possibly sparse) ids.
// Nodes appearing in no edge are dropped; survivors are relabeled with
// consecutive ids from 0 preserving the relative order of the original ids.
// Duplicate edges and self-loops are kept verbatim.
Graph build_graph_from_edges(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

// Parse a SNAP-style edge list: one "src dst" pair per line, `#` comments
// and blank lines ignored. Throws std::runtime_error with the offending
// line number on malformed input, and if the cleaned graph is empty.
Graph load_edge_list(const std::string& path);

// Same file format; every pair (u,v) yields both (u,v) and (v,u).
Graph undirected_to_directed(const std::string& path);

// Binary cleaned-graph cache, magic "PPRG" version 1:
//   magic[4], version u8, n u64 LE, m u64 LE,
//   out_offsets (n+1)*u64 LE, out_neighbors m*u32 LE
void save_graph_cache(const Graph& g, const std::string& path);
Graph load_graph_cache(const std::string& path);

// True when the file starts with the graph-cache magic bytes.
bool is_graph_cache(const std::string& path);

}  // namespace ppr
