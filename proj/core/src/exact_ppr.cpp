#include "ppr/exact_ppr.hpp"

#include <cmath>
#include <stdexcept>

namespace ppr {

namespace {

// In-place partial-pivot Gaussian elimination on the row-major n x n matrix.
void solve_inplace(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(a[i * n + k]);
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (best == 0.0) throw std::logic_error("exact_ppr: singular system");
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      std::swap(b[k], b[pivot]);
    }
    const double inv = 1.0 / a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] * inv;
      if (f == 0.0) continue;
      a[i * n + k] = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i * n + j] * b[j];
    b[i] = acc / a[i * n + i];
  }
}

}  // namespace

DensePPR exact_ppr(const Graph& g, NodeId s, double alpha) {
  const std::size_t n = g.n();
  if (n > kDenseSolveMaxNodes)
    throw std::invalid_argument("exact_ppr: graph exceeds the dense solve guard");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("exact_ppr: alpha must be in (0,1)");
  if (s >= n) throw std::invalid_argument("exact_ppr: source out of range");

  // pi * (I - (1-alpha) P) = alpha * e_s, transposed to a column system.
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1.0;
  for (NodeId v = 0; v < n; ++v) {
    const auto out = effective_out(g, v, s);
    const double share = (1.0 - alpha) / static_cast<double>(out.degree());
    for (NodeId u : out) a[static_cast<std::size_t>(u) * n + v] -= share;
  }
  std::vector<double> x(n, 0.0);
  x[s] = alpha;

  solve_inplace(a, x, n);

  double sum = 0.0;
  for (double& value : x) {
    if (value < 0.0) {
      if (value < -1e-12) throw std::logic_error("exact_ppr: negative probability");
      value = 0.0;
    }
    sum += value;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::logic_error("exact_ppr: result does not sum to 1");

  // residual of the defining equation, pi - alpha e_s - (1-alpha) pi P
  std::vector<double> resid(x);
  resid[s] -= alpha;
  for (NodeId v = 0; v < n; ++v) {
    const auto out = effective_out(g, v, s);
    const double share = (1.0 - alpha) * x[v] / static_cast<double>(out.degree());
    for (NodeId u : out) resid[u] -= share;
  }
  double resid_l1 = 0.0;
  for (double r : resid) resid_l1 += std::abs(r);
  if (resid_l1 > 1e-10) throw std::logic_error("exact_ppr: residual check failed");

  return DensePPR{std::move(x)};
}

}  // namespace ppr
