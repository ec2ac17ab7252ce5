#include "ppr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#include "binary_io.hpp"

namespace ppr {

Graph::Graph(std::vector<std::uint64_t> out_offsets, std::vector<NodeId> out_neighbors)
    : out_offsets_(std::move(out_offsets)), out_neighbors_(std::move(out_neighbors)) {
  if (out_offsets_.empty())
    throw std::runtime_error("graph: offsets array must have length n+1");
  n_ = static_cast<NodeId>(out_offsets_.size() - 1);
  m_ = out_neighbors_.size();
  for (NodeId v = 0; v < n_; ++v)
    if (out_degree(v) == 0) dead_ends_.push_back(v);
  validate();
}

void Graph::validate() const {
  if (out_offsets_[0] != 0)
    throw std::runtime_error("graph: offsets must start at 0");
  for (NodeId v = 0; v < n_; ++v)
    if (out_offsets_[v + 1] < out_offsets_[v])
      throw std::runtime_error("graph: offsets must be non-decreasing");
  if (out_offsets_[n_] != m_)
    throw std::runtime_error("graph: offsets must end at m");
  for (NodeId u : out_neighbors_)
    if (u >= n_) throw std::runtime_error("graph: neighbor id out of range");
}

Graph build_graph_from_edges(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  if (edges.empty()) throw std::runtime_error("graph is empty after cleaning");

  // Ids that appear in some edge survive; rank in sorted order is the new id.
  std::vector<std::uint64_t> ids;
  ids.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto relabel = [&ids](std::uint64_t original) {
    return static_cast<NodeId>(
        std::lower_bound(ids.begin(), ids.end(), original) - ids.begin());
  };

  const std::size_t n = ids.size();
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const auto& [u, v] : edges) ++offsets[relabel(u) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

  std::vector<NodeId> neighbors(edges.size());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) neighbors[cursor[relabel(u)]++] = relabel(v);

  return Graph(std::move(offsets), std::move(neighbors));
}

namespace {

Graph load_edges_from_file(const std::string& path, bool undirected) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fail = [&](const char* what) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": " << what;
      throw std::runtime_error(msg.str());
    };

    const char* p = line.data();
    const char* end = p + line.size();
    const auto skip_ws = [&] { while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p; };
    skip_ws();
    if (p == end || *p == '#') continue;

    std::uint64_t src = 0, dst = 0;
    auto r1 = std::from_chars(p, end, src);
    if (r1.ec != std::errc()) fail("expected non-negative integer source id");
    p = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(p, end, dst);
    if (r2.ec != std::errc()) fail("expected non-negative integer target id");
    p = r2.ptr;
    skip_ws();
    if (p != end) fail("trailing content after edge pair");

    edges.emplace_back(src, dst);
    if (undirected) edges.emplace_back(dst, src);
  }
  if (edges.empty()) throw std::runtime_error(path + ": graph is empty after cleaning");
  return build_graph_from_edges(edges);
}

constexpr char kGraphMagic[4] = {'P', 'P', 'R', 'G'};
constexpr std::uint8_t kGraphVersion = 1;

}  // namespace

Graph load_edge_list(const std::string& path) { return load_edges_from_file(path, false); }

Graph undirected_to_directed(const std::string& path) { return load_edges_from_file(path, true); }

void save_graph_cache(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(kGraphMagic, 4);
  io::write_u8(out, kGraphVersion);
  io::write_u64le(out, g.n());
  io::write_u64le(out, g.m());
  for (std::uint64_t off : g.out_offsets()) io::write_u64le(out, off);
  for (NodeId u : g.out_neighbors()) io::write_u32le(out, u);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph load_graph_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph cache: " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kGraphMagic, 4) != 0)
    throw std::runtime_error(path + ": not a graph cache (bad magic)");
  if (io::read_u8(in) != kGraphVersion)
    throw std::runtime_error(path + ": unsupported graph cache version");
  const std::uint64_t n = io::read_u64le(in);
  const std::uint64_t m = io::read_u64le(in);
  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& off : offsets) off = io::read_u64le(in);
  std::vector<NodeId> neighbors(m);
  for (auto& u : neighbors) u = io::read_u32le(in);
  if (!in) throw std::runtime_error(path + ": truncated graph cache");
  return Graph(std::move(offsets), std::move(neighbors));
}

bool is_graph_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[4];
  return in && in.read(magic, 4) && std::memcmp(magic, kGraphMagic, 4) == 0;
}

}  // namespace ppr
