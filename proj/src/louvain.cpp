#include <numeric>

#include "gclust/algorithms.hpp"
#include "gclust/rng.hpp"

namespace gclust {

namespace {

// Aggregated working graph: explicit self-loop weights (an intra-community
// edge of weight w contributes 2w to its node's strength).
struct WorkGraph {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> selfw;
  double total = 0.0;  // sum of strengths

  std::size_t size() const { return adj.size(); }
  double strength(std::uint32_t v) const {
    double s = 2.0 * selfw[v];
    for (const auto& [u, w] : adj[v]) s += w;
    return s;
  }
};

WorkGraph from_graph(const Graph& g) {
  WorkGraph wg;
  wg.adj.resize(g.num_vertices());
  wg.selfw.assign(g.num_vertices(), 0.0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    wg.adj[v].reserve(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i)
      wg.adj[v].emplace_back(nb[i], g.edge_weight_at(v, i));
  }
  for (std::uint32_t v = 0; v < wg.size(); ++v) wg.total += wg.strength(v);
  return wg;
}

// One round of local moves; returns the node->community map (dense) and
// whether any node moved.
bool one_level(const WorkGraph& wg, Rng& rng, std::vector<std::uint32_t>& comm) {
  std::size_t n = wg.size();
  comm.resize(n);
  std::iota(comm.begin(), comm.end(), 0);
  std::vector<double> k(n);
  for (std::uint32_t v = 0; v < n; ++v) k[v] = wg.strength(v);
  std::vector<double> comm_tot = k;

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  // weight from the current node to each touched community
  std::vector<double> w2c(n, 0.0);
  std::vector<std::uint32_t> touched;

  const double inv_total = wg.total > 0 ? 1.0 / wg.total : 0.0;
  bool any_move = false;
  for (;;) {
    rng.shuffle(order);
    std::size_t moves = 0;
    for (std::uint32_t u : order) {
      touched.clear();
      std::uint32_t c_old = comm[u];
      touched.push_back(c_old);  // staying put is always a candidate
      for (const auto& [x, w] : wg.adj[u]) {
        std::uint32_t c = comm[x];
        if (c != c_old && w2c[c] == 0.0) touched.push_back(c);  // weights are positive
        w2c[c] += w;
      }

      comm_tot[c_old] -= k[u];
      std::uint32_t best = c_old;
      double best_gain = w2c[c_old] - k[u] * comm_tot[c_old] * inv_total;
      for (std::uint32_t c : touched) {
        if (c == c_old) continue;
        double gain = w2c[c] - k[u] * comm_tot[c] * inv_total;
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best = c;
        }
      }
      comm_tot[best] += k[u];
      if (best != c_old) {
        comm[u] = best;
        ++moves;
        any_move = true;
      }
      for (std::uint32_t c : touched) w2c[c] = 0.0;
    }
    if (moves == 0) break;
  }
  return any_move;
}

WorkGraph aggregate(const WorkGraph& wg, const std::vector<std::uint32_t>& dense_comm,
                    std::size_t n_comm) {
  WorkGraph out;
  out.adj.resize(n_comm);
  out.selfw.assign(n_comm, 0.0);
  std::vector<double> acc(n_comm, 0.0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t c = 0; c < n_comm; ++c) out.adj[c].reserve(8);

  // Accumulate per source community.
  std::vector<std::vector<std::uint32_t>> members(n_comm);
  for (std::uint32_t v = 0; v < wg.size(); ++v) members[dense_comm[v]].push_back(v);
  for (std::uint32_t c = 0; c < n_comm; ++c) {
    touched.clear();
    double self_acc = 0.0;
    for (std::uint32_t v : members[c]) {
      self_acc += wg.selfw[v];
      for (const auto& [x, w] : wg.adj[v]) {
        std::uint32_t cx = dense_comm[x];
        if (cx == c) {
          self_acc += 0.5 * w;  // each intra edge seen from both endpoints
        } else {
          if (acc[cx] == 0.0) touched.push_back(cx);
          acc[cx] += w;
        }
      }
    }
    out.selfw[c] = self_acc;
    for (std::uint32_t cx : touched) {
      out.adj[c].emplace_back(cx, acc[cx]);
      acc[cx] = 0.0;
    }
  }
  out.total = wg.total;
  return out;
}

}  // namespace

Clustering louvain(const Graph& g, std::uint64_t seed) {
  VertexId n = g.num_vertices();
  std::vector<ClusterId> vertex_comm(n);
  std::iota(vertex_comm.begin(), vertex_comm.end(), 0);
  if (n == 0 || g.num_edges() == 0) return Clustering::from_labels(vertex_comm);

  Rng rng(seed);
  WorkGraph wg = from_graph(g);
  for (int level = 0; level < 64; ++level) {
    std::vector<std::uint32_t> comm;
    bool moved = one_level(wg, rng, comm);
    if (!moved) break;

    // densify community ids
    std::vector<std::uint32_t> dense(wg.size(), 0);
    std::vector<std::int64_t> idmap(wg.size(), -1);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < wg.size(); ++v) {
      if (idmap[comm[v]] < 0) idmap[comm[v]] = next++;
      dense[v] = static_cast<std::uint32_t>(idmap[comm[v]]);
    }
    for (VertexId v = 0; v < n; ++v) vertex_comm[v] = dense[vertex_comm[v]];
    if (next == wg.size()) break;  // nothing merged
    wg = aggregate(wg, dense, next);
  }
  return Clustering::from_labels(vertex_comm);
}

}  // namespace gclust
