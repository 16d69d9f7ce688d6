#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gclust/algorithms.hpp"
#include "gclust/rng.hpp"

namespace gclust {

namespace {

Clustering lpa_impl(const Graph& g, std::uint64_t seed, std::uint32_t max_iters,
                    bool use_weights) {
  VertexId n = g.num_vertices();
  std::vector<ClusterId> label(n);
  std::iota(label.begin(), label.end(), 0);
  if (n == 0) return Clustering::from_labels(label);

  Rng rng(seed);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::unordered_map<ClusterId, double> votes;
  std::vector<ClusterId> best;
  for (std::uint32_t iter = 0; iter < max_iters; ++iter) {
    rng.shuffle(order);
    bool changed = false;
    for (VertexId v : order) {
      auto nb = g.neighbors(v);
      if (nb.empty()) continue;
      votes.clear();
      for (std::size_t i = 0; i < nb.size(); ++i)
        votes[label[nb[i]]] += use_weights ? g.edge_weight_at(v, i) : 1.0;
      double top = 0.0;
      for (const auto& [l, w] : votes) top = std::max(top, w);
      best.clear();
      for (const auto& [l, w] : votes)
        if (w == top) best.push_back(l);
      std::sort(best.begin(), best.end());  // hash order is not a contract
      // Keeping the current label when it is among the maxima lets ties
      // settle instead of oscillating.
      bool keep = false;
      for (ClusterId l : best)
        if (l == label[v]) keep = true;
      if (keep) continue;
      label[v] = best.size() == 1 ? best.front() : best[rng.index(best.size())];
      changed = true;
    }
    if (!changed) break;
  }
  return Clustering::from_labels(label);
}

}  // namespace

Clustering lpa(const Graph& g, std::uint64_t seed, std::uint32_t max_iters) {
  return lpa_impl(g, seed, max_iters, g.weighted());
}

Clustering lpa_unweighted(const Graph& g, std::uint64_t seed, std::uint32_t max_iters) {
  return lpa_impl(g, seed, max_iters, false);
}

}  // namespace gclust
