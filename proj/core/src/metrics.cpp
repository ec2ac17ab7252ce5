#include "ppr/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "ppr/exact_ppr.hpp"
#include "ppr/push.hpp"

namespace ppr {

double l1_error(std::span<const double> estimate, std::span<const double> truth) {
  if (estimate.size() != truth.size())
    throw std::invalid_argument("l1_error: vector lengths differ");
  double total = 0.0;
  for (std::size_t i = 0; i < estimate.size(); ++i)
    total += std::abs(estimate[i] - truth[i]);
  return total;
}

double l1_error(const PPRVector& estimate, const PPRVector& truth) {
  if (estimate.source != truth.source)
    throw std::invalid_argument("l1_error: results are for different sources");
  return l1_error(std::span<const double>(estimate.estimates),
                  std::span<const double>(truth.estimates));
}

ErrorReport compare_to_truth(std::span<const double> estimate,
                             std::span<const double> truth, double mu, double epsilon) {
  if (estimate.size() != truth.size())
    throw std::invalid_argument("compare_to_truth: vector lengths differ");
  ErrorReport report;
  for (std::size_t i = 0; i < estimate.size(); ++i) {
    report.l1 += std::abs(estimate[i] - truth[i]);
    if (truth[i] >= mu) {
      ++report.nodes_above_mu;
      const double rel = std::abs(estimate[i] - truth[i]) / truth[i];
      report.max_rel_above_mu = std::max(report.max_rel_above_mu, rel);
      if (rel > epsilon) ++report.violations;
    }
  }
  return report;
}

PPRVector ground_truth(const Graph& g, NodeId s, double alpha) {
  QueryConfig cfg;
  cfg.alpha = alpha;
  PPRVector result = power_push(g, s, alpha, kGroundTruthLambda, cfg);
  if (g.n() <= kDenseSolveMaxNodes) {
    const DensePPR exact = exact_ppr(g, s, alpha);
    if (l1_error(std::span<const double>(result.estimates),
                 std::span<const double>(exact.pi)) > 1e-12)
      throw std::logic_error("ground_truth: disagrees with the dense solve");
  }
  return result;
}

}  // namespace ppr
