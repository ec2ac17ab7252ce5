#include "ppr/walk_index.hpp"

#include <cstring>
#include <fstream>

#include "binary_io.hpp"

namespace ppr {

NodeId random_walk(const Graph& g, NodeId start, NodeId source, double alpha, Rng& rng) {
  NodeId current = start;
  while (rng.uniform01() >= alpha) {
    const auto out = effective_out(g, current, source);
    current = out[rng.below(out.degree())];
  }
  return current;
}

WalkIndex::WalkIndex(double alpha, std::uint64_t seed, std::uint8_t rng_id,
                     std::vector<std::uint64_t> offsets, std::vector<NodeId> endpoints)
    : alpha_(alpha),
      seed_(seed),
      rng_id_(rng_id),
      offsets_(std::move(offsets)),
      endpoints_(std::move(endpoints)) {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != endpoints_.size())
    throw std::runtime_error("walk index: inconsistent offsets");
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
    if (offsets_[i + 1] < offsets_[i])
      throw std::runtime_error("walk index: offsets must be non-decreasing");
  const auto n = static_cast<NodeId>(offsets_.size() - 1);
  for (NodeId endpoint : endpoints_)
    if (endpoint >= n) throw std::runtime_error("walk index: endpoint id out of range");
}

void WalkIndex::check_compatible(const Graph& g) const {
  if (node_count() != g.n() || endpoint_count() != g.m())
    throw std::runtime_error("walk index does not match the graph shape");
  for (NodeId v = 0; v < g.n(); ++v)
    if (endpoints_of(v).size() != g.out_degree(v))
      throw std::runtime_error("walk index slice length differs from out-degree");
}

WalkIndex build_index(const Graph& g, double alpha, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeId> endpoints;
  endpoints.reserve(g.m());
  for (NodeId v = 0; v < g.n(); ++v) {
    const EdgeId walks = g.out_degree(v);  // dead-ends store nothing
    for (EdgeId k = 0; k < walks; ++k)
      endpoints.push_back(random_walk(g, v, v, alpha, rng));
  }
  return WalkIndex(alpha, seed, kRngIdMt19937_64, g.out_offsets(), std::move(endpoints));
}

namespace {
constexpr char kIndexMagic[4] = {'P', 'P', 'R', 'W'};
constexpr std::uint8_t kIndexVersion = 1;
}  // namespace

void save_index(const WalkIndex& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(kIndexMagic, 4);
  io::write_u8(out, kIndexVersion);
  io::write_u8(out, index.rng_id());
  io::write_f64le(out, index.alpha());
  io::write_u64le(out, index.seed());
  io::write_u64le(out, index.node_count());
  io::write_u64le(out, index.endpoint_count());
  const NodeId n = index.node_count();
  std::uint64_t offset = 0;
  io::write_u64le(out, 0);
  for (NodeId v = 0; v < n; ++v) {
    offset += index.endpoints_of(v).size();
    io::write_u64le(out, offset);
  }
  for (NodeId v = 0; v < n; ++v)
    for (NodeId endpoint : index.endpoints_of(v)) io::write_u32le(out, endpoint);
  if (!out) throw std::runtime_error("write failed: " + path);
}

WalkIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open walk index: " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kIndexMagic, 4) != 0)
    throw std::runtime_error(path + ": not a walk index (bad magic)");
  if (io::read_u8(in) != kIndexVersion)
    throw std::runtime_error(path + ": unsupported walk index version");
  const std::uint8_t rng_id = io::read_u8(in);
  if (rng_id != kRngIdMt19937_64)
    throw std::runtime_error(path + ": unknown generator id");
  const double alpha = io::read_f64le(in);
  const std::uint64_t seed = io::read_u64le(in);
  const std::uint64_t n = io::read_u64le(in);
  const std::uint64_t m = io::read_u64le(in);
  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& off : offsets) off = io::read_u64le(in);
  std::vector<NodeId> endpoints(m);
  for (auto& endpoint : endpoints) endpoint = io::read_u32le(in);
  if (!in) throw std::runtime_error(path + ": truncated walk index");
  return WalkIndex(alpha, seed, rng_id, std::move(offsets), std::move(endpoints));
}

}  // namespace ppr
