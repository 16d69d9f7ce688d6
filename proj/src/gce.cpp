#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gclust/algorithms.hpp"

namespace gclust {

namespace {

std::uint32_t links_into(const Graph& g, const std::vector<char>& in, VertexId v) {
  std::uint32_t cnt = 0;
  for (VertexId u : g.neighbors(v))
    if (in[u]) ++cnt;
  return cnt;
}

double fitness_of(double k_in, double k_out, double alpha) {
  double denom = std::pow(k_in + k_out, alpha);
  return denom == 0.0 ? 0.0 : k_in / denom;
}

double jaccard(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::size_t inter = 0, i = 0, j = 0;  // both sorted
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++inter;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

double gce_fitness(const Graph& g, std::span<const VertexId> s, double alpha) {
  if (s.empty()) throw std::invalid_argument("gce_fitness of empty set");
  if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : s) in[v] = 1;
  double k_in = 0.0, k_out = 0.0;
  for (VertexId v : s) {
    std::uint32_t internal = links_into(g, in, v);
    k_in += internal;  // both endpoints contribute: k_in = 2 * internal edges
    k_out += g.degree(v) - internal;
  }
  return fitness_of(k_in, k_out, alpha);
}

Clustering gce_expand(const Graph& g, const std::vector<std::vector<VertexId>>& seeds,
                      double alpha) {
  if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
  std::vector<std::vector<VertexId>> accepted;
  std::vector<char> in(g.num_vertices(), 0);

  for (const std::vector<VertexId>& seed : seeds) {
    if (seed.empty()) throw std::invalid_argument("empty seed set");
    std::fill(in.begin(), in.end(), 0);
    std::vector<VertexId> community = seed;
    double k_in = 0.0, k_out = 0.0;
    for (VertexId v : seed) in[v] = 1;
    for (VertexId v : seed) {
      std::uint32_t internal = links_into(g, in, v);
      k_in += internal;
      k_out += g.degree(v) - internal;
    }
    double f = fitness_of(k_in, k_out, alpha);

    for (;;) {
      // frontier: outside vertices adjacent to the community
      VertexId best_v = 0;
      double best_f = f;
      bool found = false;
      std::vector<char> seen(g.num_vertices(), 0);
      for (VertexId v : community) {
        for (VertexId u : g.neighbors(v)) {
          if (in[u] || seen[u]) continue;
          seen[u] = 1;
          std::uint32_t into = links_into(g, in, u);
          double ki2 = k_in + 2.0 * into;
          double ko2 = k_out - into + (g.degree(u) - into);
          double f2 = fitness_of(ki2, ko2, alpha);
          if (f2 > best_f || (found && f2 == best_f && u < best_v)) {
            best_f = f2;
            best_v = u;
            found = true;
          }
        }
      }
      if (!found) break;
      std::uint32_t into = links_into(g, in, best_v);
      k_in += 2.0 * into;
      k_out += (g.degree(best_v) - into) - into;
      in[best_v] = 1;
      community.push_back(best_v);
      f = best_f;
    }

    std::sort(community.begin(), community.end());
    bool duplicate = false;
    for (const auto& other : accepted) {
      if (jaccard(community, other) >= 0.75) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) accepted.push_back(std::move(community));
  }

  // Cover the leftovers as singletons so the result is a valid clustering.
  std::vector<char> covered(g.num_vertices(), 0);
  for (const auto& c : accepted)
    for (VertexId v : c) covered[v] = 1;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!covered[v]) accepted.push_back({v});

  return Clustering::from_clusters(g.num_vertices(), std::move(accepted));
}

std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g, std::size_t min_size,
                                                   std::size_t cap) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> R;

  // Bron-Kerbosch with pivoting.
  auto neighbors_of = [&](VertexId v) { return g.neighbors(v); };
  std::function<void(std::vector<VertexId>, std::vector<VertexId>)> extend =
      [&](std::vector<VertexId> P, std::vector<VertexId> X) {
        if (out.size() >= cap) return;
        if (P.empty() && X.empty()) {
          if (R.size() >= min_size) out.push_back(R);
          return;
        }
        // pivot: vertex of P ∪ X with most neighbors in P
        VertexId pivot = 0;
        std::size_t best = 0;
        bool have = false;
        for (const auto& pool : {P, X}) {
          for (VertexId u : pool) {
            std::size_t cnt = 0;
            for (VertexId w : neighbors_of(u))
              if (std::binary_search(P.begin(), P.end(), w)) ++cnt;
            if (!have || cnt > best) {
              best = cnt;
              pivot = u;
              have = true;
            }
          }
        }
        std::vector<VertexId> cand;
        for (VertexId u : P)
          if (!g.has_edge(pivot, u)) cand.push_back(u);
        for (VertexId u : cand) {
          auto nb = neighbors_of(u);
          std::vector<VertexId> P2, X2;
          for (VertexId w : P)
            if (std::binary_search(nb.begin(), nb.end(), w)) P2.push_back(w);
          for (VertexId w : X)
            if (std::binary_search(nb.begin(), nb.end(), w)) X2.push_back(w);
          R.push_back(u);
          extend(std::move(P2), std::move(X2));
          R.pop_back();
          P.erase(std::find(P.begin(), P.end(), u));
          X.insert(std::lower_bound(X.begin(), X.end(), u), u);
          if (out.size() >= cap) return;
        }
      };

  std::vector<VertexId> P(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) P[v] = v;
  extend(std::move(P), {});
  return out;
}

Clustering gce(const Graph& g, double alpha) {
  std::vector<std::vector<VertexId>> seeds = maximal_cliques(g, 4);
  // Larger cliques first; deterministic order otherwise.
  std::stable_sort(seeds.begin(), seeds.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  if (seeds.empty()) {
    // No clique seeds: fall back to per-vertex singleton communities.
    std::vector<ClusterId> label(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) label[v] = v;
    return Clustering::from_labels(label);
  }
  return gce_expand(g, seeds, alpha);
}

}  // namespace gclust
