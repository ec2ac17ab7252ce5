#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ppr {

using NodeId = std::uint32_t;
using EdgeId = std::uint64_t;

inline constexpr double kDefaultAlpha = 0.2;

// lambda defaults to min(1/m, 1e-8)
inline double default_lambda(EdgeId m) {
  return std::min(1.0 / static_cast<double>(m), 1e-8);
}

// mu defaults to the average PPR value, 1/n
inline double default_mu(NodeId n) { return 1.0 / static_cast<double>(n); }

// sequential-scan switch point defaults to n/4 (integer division)
inline std::uint64_t default_scan_threshold(NodeId n) { return n / 4; }

struct QueryConfig {
  double alpha = kDefaultAlpha;
  std::optional<double> lambda;                 // min(1/m, 1e-8) when unset
  std::optional<double> epsilon;                // required for approximate queries
  std::optional<double> mu;                     // 1/n when unset
  std::uint64_t seed = 0;
  std::uint32_t epoch_num = 8;
  std::optional<std::uint64_t> scan_threshold;  // n/4 when unset

  void validate() const {
    if (!(alpha >= 0.0 && alpha < 1.0))
      throw std::invalid_argument("alpha must be in [0,1)");
    if (lambda && !(*lambda > 0.0 && *lambda <= 1.0))
      throw std::invalid_argument("lambda must be in (0,1]");
    if (epsilon && !(*epsilon > 0.0))
      throw std::invalid_argument("epsilon must be positive");
    if (mu && !(*mu > 0.0 && *mu <= 1.0))
      throw std::invalid_argument("mu must be in (0,1]");
    if (epoch_num == 0) throw std::invalid_argument("epoch_num must be positive");
  }

  double lambda_for(EdgeId m) const { return lambda ? *lambda : default_lambda(m); }
  double mu_for(NodeId n) const { return mu ? *mu : default_mu(n); }
  std::uint64_t scan_threshold_for(NodeId n) const {
    return scan_threshold ? *scan_threshold : default_scan_threshold(n);
  }
};

// Result of a single-source query. High-precision engines return both the
// estimate and the final residues; the residue mass equals the l1 error.
struct PPRVector {
  std::vector<double> estimates;
  std::vector<double> residues;
  NodeId source = 0;
  double alpha = kDefaultAlpha;
  double achieved_r_sum = 0.0;
  std::uint64_t pushes = 0;  // edge pushes: each push on v costs its degree
  std::uint64_t walks = 0;   // random walks performed (approximate queries)
};

}  // namespace ppr
