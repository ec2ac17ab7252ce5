#pragma once

#include <span>

#include "ppr/graph.hpp"
#include "ppr/types.hpp"

namespace ppr {

inline constexpr double kGroundTruthLambda = 1e-17;

// l1 distance between an estimate and a reference over the same node set.
double l1_error(std::span<const double> estimate, std::span<const double> truth);
double l1_error(const PPRVector& estimate, const PPRVector& truth);

// Relative-error audit over the nodes whose true value clears mu.
struct ErrorReport {
  double l1 = 0.0;
  double max_rel_above_mu = 0.0;
  std::uint64_t nodes_above_mu = 0;
  std::uint64_t violations = 0;  // nodes with pi >= mu and rel error > epsilon
};

ErrorReport compare_to_truth(std::span<const double> estimate,
                             std::span<const double> truth, double mu, double epsilon);

// Reference answer at lambda = 1e-17, the practical limit of double
// precision. On graphs small enough for the dense solve the result is also
// cross-checked against it (l1 within 1e-12). Deterministic.
PPRVector ground_truth(const Graph& g, NodeId s, double alpha);

}  // namespace ppr
