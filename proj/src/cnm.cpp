#include <queue>
#include <unordered_map>

#include "gclust/algorithms.hpp"

namespace gclust {

namespace {

struct MergeCandidate {
  double gain;
  std::uint32_t i, j;        // i < j
  std::uint64_t vi, vj;      // community versions at push time
};

struct CandidateOrder {
  bool operator()(const MergeCandidate& a, const MergeCandidate& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    if (a.i != b.i) return a.i > b.i;  // ties: smallest pair first
    return a.j > b.j;
  }
};

}  // namespace

Clustering greedy_cnm(const Graph& g) {
  VertexId n = g.num_vertices();
  std::vector<ClusterId> label(n);
  for (VertexId v = 0; v < n; ++v) label[v] = v;
  if (g.num_edges() == 0) return Clustering::from_labels(label);

  // Structural (weight-blind) fractions: a_i = deg_i / 2m, e_ij = 1 / 2m per
  // edge slot between i and j.
  const double inv_arcs = 1.0 / static_cast<double>(g.num_arcs());
  std::vector<double> a(n);
  std::vector<std::unordered_map<std::uint32_t, double>> e(n);
  for (VertexId v = 0; v < n; ++v) {
    a[v] = g.degree(v) * inv_arcs;
    for (VertexId u : g.neighbors(v)) e[v][u] = inv_arcs;
  }

  std::vector<std::uint64_t> version(n, 0);
  std::vector<bool> alive(n, true);
  std::priority_queue<MergeCandidate, std::vector<MergeCandidate>, CandidateOrder> heap;
  auto push_pair = [&](std::uint32_t i, std::uint32_t j) {
    if (i > j) std::swap(i, j);
    double gain = 2.0 * (e[i].at(j) - a[i] * a[j]);
    heap.push({gain, i, j, version[i], version[j]});
  };
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.neighbors(v))
      if (v < u) push_pair(v, u);

  std::vector<std::uint32_t> parent(n);
  for (VertexId v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  while (!heap.empty()) {
    MergeCandidate top = heap.top();
    if (top.gain <= 1e-15) break;  // peak Q reached
    heap.pop();
    if (!alive[top.i] || !alive[top.j]) continue;
    if (version[top.i] != top.vi || version[top.j] != top.vj) continue;

    // merge j into i (i = smaller id survives)
    std::uint32_t i = top.i, j = top.j;
    alive[j] = false;
    parent[j] = i;
    a[i] += a[j];
    version[i]++;
    for (const auto& [x, w] : e[j]) {
      if (x == i) continue;
      e[x].erase(j);
      e[i][x] += w;
      e[x][i] = e[i][x];
    }
    e[i].erase(j);
    e[j].clear();
    for (const auto& [x, w] : e[i]) push_pair(i, x);
  }

  for (VertexId v = 0; v < n; ++v) label[v] = find(v);
  return Clustering::from_labels(label);
}

}  // namespace gclust
