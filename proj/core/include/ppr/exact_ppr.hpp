#pragma once

#include <vector>

#include "ppr/graph.hpp"
#include "ppr/types.hpp"

namespace ppr {

// Exact per-node PPR values for one source, dense double precision.
struct DensePPR {
  std::vector<double> pi;
};

inline constexpr NodeId kDenseSolveMaxNodes = 2000;

// Solve pi = alpha*e_s + (1-alpha)*pi*P directly via partial-pivot Gaussian
// elimination on the n x n system. Dead-end rows of P are the indicator of s
// (the jump-back-to-source convention), duplicate edges count multiplicity.
// Intended as the correctness reference on tiny graphs; rejects n over the
// dense guard. The result is checked for non-negativity, unit l1 norm and a
// residual below 1e-10 before it is returned.
DensePPR exact_ppr(const Graph& g, NodeId s, double alpha);

}  // namespace ppr
