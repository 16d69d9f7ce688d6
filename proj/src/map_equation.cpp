#include <cmath>
#include <stdexcept>

#include "gclust/algorithms.hpp"

namespace gclust {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double map_equation_codelength(const Graph& g, const Clustering& cl, double teleport) {
  if (cl.overlapped())
    throw std::invalid_argument("map equation requires a crisp partition");
  if (teleport < 0.0 || teleport >= 1.0)
    throw std::invalid_argument("teleport probability must be in [0,1)");
  VertexId n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("empty graph");

  // Stationary visit rates: p' = (1-tau) P^T p + (tau + (1-tau)*dangling) u.
  std::vector<double> strength(n);
  for (VertexId v = 0; v < n; ++v) strength[v] = g.strength(v);

  std::vector<double> p(n, 1.0 / n), next(n);
  const double uniform = 1.0 / n;
  constexpr int kMaxSweeps = 10000;
  bool converged = false;
  for (int it = 0; it < kMaxSweeps; ++it) {
    double dangling = 0.0;
    for (VertexId v = 0; v < n; ++v)
      if (strength[v] == 0.0) dangling += p[v];
    std::fill(next.begin(), next.end(), (teleport + (1.0 - teleport) * dangling) * uniform);
    for (VertexId v = 0; v < n; ++v) {
      if (strength[v] == 0.0) continue;
      double share = (1.0 - teleport) * p[v] / strength[v];
      auto nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        next[nb[i]] += share * g.edge_weight_at(v, i);
    }
    double diff = 0.0;
    for (VertexId v = 0; v < n; ++v) diff += std::abs(next[v] - p[v]);
    p.swap(next);
    if (diff < 1e-12) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw std::runtime_error("visit-rate power iteration did not converge in 10^4 sweeps");

  // Module exit rates from the non-teleport flow across boundaries.
  std::size_t k = cl.num_clusters();
  std::vector<double> q(k, 0.0), p_in(k, 0.0);
  std::vector<ClusterId> label(n);
  for (ClusterId c = 0; c < k; ++c)
    for (VertexId v : cl.cluster(c)) label[v] = c;
  for (VertexId v = 0; v < n; ++v) {
    p_in[label[v]] += p[v];
    if (strength[v] == 0.0) continue;
    double share = (1.0 - teleport) * p[v] / strength[v];
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (label[nb[i]] != label[v]) q[label[v]] += share * g.edge_weight_at(v, i);
  }

  double q_total = 0.0;
  for (double qi : q) q_total += qi;

  // L = q H(Q) + sum_i p_circ^i H(P^i), all in bits.
  double index_term = 0.0;
  if (q_total > 0.0) {
    double h = 0.0;
    for (double qi : q) h -= plogp(qi / q_total);
    index_term = q_total * h;
  }
  double module_term = 0.0;
  for (ClusterId c = 0; c < k; ++c) {
    double circ = q[c] + p_in[c];
    if (circ <= 0.0) continue;
    double h = -plogp(q[c] / circ);
    for (VertexId v : cl.cluster(c)) h -= plogp(p[v] / circ);
    module_term += circ * h;
  }
  return index_term + module_term;
}

}  // namespace gclust
