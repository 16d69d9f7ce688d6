#include "gclust/props.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "gclust/rng.hpp"

namespace gclust {

namespace {

constexpr std::uint32_t kUnreached = 0xffffffffu;

// Hop-count BFS from src; dist[] entries untouched vertices stay kUnreached.
void bfs(const Graph& g, VertexId src, std::vector<std::uint32_t>& dist) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  dist[src] = 0;
  std::vector<VertexId> frontier{src}, next;
  while (!frontier.empty()) {
    next.clear();
    for (VertexId u : frontier) {
      std::uint32_t d = dist[u] + 1;
      for (VertexId v : g.neighbors(u)) {
        if (dist[v] == kUnreached) {
          dist[v] = d;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
}

double percentile90(std::vector<std::uint32_t>& values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double pos = 0.9 * static_cast<double>(values.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, values.size() - 1);
  double frac = pos - static_cast<double>(lo);
  return static_cast<double>(values[lo]) * (1.0 - frac) +
         static_cast<double>(values[hi]) * frac;
}

}  // namespace

double density(const Graph& g) {
  if (g.num_vertices() < 2) throw std::invalid_argument("density requires n >= 2");
  double n = g.num_vertices();
  return static_cast<double>(g.num_arcs()) / (n * (n - 1.0));
}

std::pair<std::uint32_t, double> diameters(const Graph& g, std::uint32_t sample_size,
                                           std::uint64_t seed) {
  VertexId n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("diameters on empty graph");

  std::vector<VertexId> sources;
  bool sampled = n > kExactDiameterThreshold && sample_size < n;
  if (!sampled) {
    sources.resize(n);
    for (VertexId v = 0; v < n; ++v) sources[v] = v;
  } else {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    Rng rng(seed);
    rng.shuffle(all);
    sources.assign(all.begin(), all.begin() + sample_size);
  }

  std::uint32_t diameter = 0;
  std::vector<std::uint32_t> finite;
  std::vector<std::uint32_t> dist(n);
  for (VertexId s : sources) {
    bfs(g, s, dist);
    for (VertexId v = 0; v < n; ++v) {
      if (v == s || dist[v] == kUnreached) continue;
      diameter = std::max(diameter, dist[v]);
      finite.push_back(dist[v]);
    }
  }
  return {diameter, percentile90(finite)};
}

std::vector<VertexCentrality> centralities(const Graph& g) {
  VertexId n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("centralities require n >= 2");
  std::vector<VertexCentrality> out(n);
  std::vector<std::uint32_t> dist(n);
  for (VertexId v = 0; v < n; ++v) {
    out[v].degree_centrality = static_cast<double>(g.degree(v)) / (n - 1.0);
    bfs(g, v, dist);
    std::uint64_t total = 0, reached = 0;
    for (VertexId u = 0; u < n; ++u) {
      if (u == v || dist[u] == kUnreached) continue;
      total += dist[u];
      ++reached;
    }
    if (reached > 0) {
      out[v].farness = static_cast<double>(total) / static_cast<double>(reached);
      out[v].closeness = 1.0 / out[v].farness;
    }
  }
  return out;
}

std::uint32_t eccentricity(const Graph& g, VertexId v) {
  if (v >= g.num_vertices()) throw std::invalid_argument("unknown vertex");
  std::vector<std::uint32_t> dist(g.num_vertices());
  bfs(g, v, dist);
  std::uint32_t ecc = 0;
  for (std::uint32_t d : dist)
    if (d != kUnreached) ecc = std::max(ecc, d);
  return ecc;
}

std::vector<std::uint32_t> eccentricities(const Graph& g) {
  std::vector<std::uint32_t> out(g.num_vertices());
  std::vector<std::uint32_t> dist(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    bfs(g, v, dist);
    std::uint32_t ecc = 0;
    for (std::uint32_t d : dist)
      if (d != kUnreached) ecc = std::max(ecc, d);
    out[v] = ecc;
  }
  return out;
}

std::pair<double, std::vector<double>> clustering_coefficients(const Graph& g) {
  if (g.directed())
    throw std::invalid_argument("clustering coefficients are defined on undirected graphs");
  VertexId n = g.num_vertices();
  std::vector<double> local(n, 0.0);
  std::uint64_t closed = 0;  // sum over v of links(v) = 3 * #triangles
  std::uint64_t triplets = 0;

  for (VertexId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::uint64_t deg = nb.size();
    triplets += deg * (deg - 1) / 2;
    if (deg < 2) continue;
    // links(v): edges among v's neighbors; each pair (u,w) with u < w seen
    // exactly once by scanning u's adjacency above u.
    std::uint64_t links = 0;
    for (VertexId u : nb) {
      auto un = g.neighbors(u);
      for (auto it = std::upper_bound(un.begin(), un.end(), u); it != un.end(); ++it)
        if (std::binary_search(nb.begin(), nb.end(), *it)) ++links;
    }
    local[v] = static_cast<double>(links) / (static_cast<double>(deg) * (deg - 1) / 2.0);
    closed += links;
  }
  double global =
      triplets == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triplets);
  return {global, std::move(local)};
}

GraphProfile profile(const Graph& g, std::uint32_t sample_size, std::uint64_t seed) {
  GraphProfile p;
  p.density = g.num_vertices() >= 2 ? density(g) : 0.0;
  auto [diam, eff] = diameters(g, sample_size, seed);
  p.diameter = diam;
  p.effective_diameter = eff;
  p.sampled = g.num_vertices() > kExactDiameterThreshold && sample_size < g.num_vertices();
  auto [global, local] = clustering_coefficients(g);
  p.global_cc = global;
  double sum = 0.0;
  for (double x : local) sum += x;
  p.avg_local_cc = local.empty() ? 0.0 : sum / static_cast<double>(local.size());
  return p;
}

}  // namespace gclust
