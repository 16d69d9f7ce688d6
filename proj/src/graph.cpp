#include "gclust/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace gclust {

namespace {

struct RawEdge {
  VertexId u, v;
  double w;
};

struct PendingEdge {
  VertexId u, v;     // canonical (u < v for undirected)
  VertexId ou, ov;   // original orientation
  double w;
  std::uint64_t order;
};

// Duplicate resolution on canonical pairs. An undirected edge stated once in
// each orientation with the same weight is a restatement and collapses in
// both modes; a repeat of the same orientation, or conflicting weights, is a
// duplicate: error in Strict, last-wins in LastWins.
std::vector<RawEdge> resolve_duplicates(std::vector<PendingEdge>& pending,
                                        const BuildOptions& opts,
                                        const std::vector<ExternalId>& ext_ids) {
  std::sort(pending.begin(), pending.end(), [](const PendingEdge& a, const PendingEdge& b) {
    return std::tie(a.u, a.v, a.order) < std::tie(b.u, b.v, b.order);
  });

  std::vector<RawEdge> out;
  out.reserve(pending.size() * (opts.directed ? 1 : 2));
  for (std::size_t i = 0; i < pending.size();) {
    std::size_t j = i;
    while (j + 1 < pending.size() && pending[j + 1].u == pending[i].u &&
           pending[j + 1].v == pending[i].v)
      ++j;
    if (j > i && opts.duplicates == DuplicatePolicy::Strict) {
      bool benign = !opts.directed && (j - i + 1 == 2) &&
                    pending[i].ou != pending[j].ou && pending[i].w == pending[j].w;
      if (!benign)
        throw std::invalid_argument(
            "duplicate edge (" + std::to_string(ext_ids[pending[i].ou]) + "," +
            std::to_string(ext_ids[pending[i].ov]) + ") in strict mode");
    }
    const PendingEdge& keep = pending[j];
    out.push_back({keep.u, keep.v, keep.w});
    if (!opts.directed) out.push_back({keep.v, keep.u, keep.w});
    i = j + 1;
  }
  return out;
}

}  // namespace

// Private-field access for the free-function builders.
struct GraphAssembler {
  static void init(Graph& g, const BuildOptions& opts) {
    g.directed_ = opts.directed;
    g.weighted_ = opts.weighted;
  }
  static std::vector<ExternalId>& ext_ids(Graph& g) { return g.ext_ids_; }
  static void set_n(Graph& g, VertexId n) { g.n_ = n; }

  // CSR assembly from final, duplicate-free arcs (both orientations already
  // present for undirected graphs).
  static void assemble(Graph& g, std::vector<RawEdge>& arcs, const BuildOptions& opts) {
    std::sort(arcs.begin(), arcs.end(), [](const RawEdge& a, const RawEdge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });

    g.offsets_.assign(g.n_ + 1, 0);
    for (const RawEdge& e : arcs) g.offsets_[e.u + 1]++;
    for (VertexId v = 0; v < g.n_; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.nbrs_.resize(arcs.size());
    if (opts.weighted) g.wts_.resize(arcs.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const RawEdge& e : arcs) {
      std::uint64_t p = cursor[e.u]++;
      g.nbrs_[p] = e.v;
      if (opts.weighted) g.wts_[p] = e.w;
    }
    g.m_ = opts.directed ? arcs.size() : arcs.size() / 2;
  }
};

Graph build_graph(std::span<const EdgeInput> edges, const BuildOptions& opts,
                  std::span<const ExternalId> universe) {
  Graph g;
  GraphAssembler::init(g, opts);
  std::vector<ExternalId>& ids = GraphAssembler::ext_ids(g);

  std::unordered_map<ExternalId, VertexId> idmap;
  idmap.reserve(edges.size() * 2 + universe.size());
  const bool closed = !universe.empty();
  for (ExternalId ext : universe) {
    auto [it, fresh] = idmap.try_emplace(ext, static_cast<VertexId>(ids.size()));
    if (!fresh) throw std::invalid_argument("duplicate vertex in universe");
    ids.push_back(ext);
  }
  auto intern = [&](ExternalId ext) {
    auto [it, fresh] = idmap.try_emplace(ext, static_cast<VertexId>(ids.size()));
    if (fresh) {
      if (closed) throw std::invalid_argument("edge endpoint outside vertex universe");
      ids.push_back(ext);
    }
    return it->second;
  };

  std::vector<PendingEdge> pending;
  pending.reserve(edges.size());
  std::uint64_t order = 0;
  for (const EdgeInput& e : edges) {
    if (e.w.has_value()) {
      if (!opts.weighted)
        throw std::invalid_argument("weight supplied for unweighted graph");
      if (!(*e.w > 0.0))
        throw std::invalid_argument("edge weights must be strictly positive");
    } else if (opts.weighted) {
      throw std::invalid_argument("weighted graph requires a weight on every edge");
    }
    VertexId u = intern(e.u);
    VertexId v = intern(e.v);
    if (u == v) continue;  // self-loops dropped; no measure defines them
    PendingEdge p{u, v, u, v, e.w.value_or(1.0), order++};
    if (!opts.directed && p.u > p.v) std::swap(p.u, p.v);
    pending.push_back(p);
  }

  GraphAssembler::set_n(g, static_cast<VertexId>(ids.size()));
  std::vector<RawEdge> arcs = resolve_duplicates(pending, opts, ids);
  GraphAssembler::assemble(g, arcs, opts);
  return g;
}

Graph build_graph_dense(VertexId n, std::span<const EdgeInput> edges,
                        const BuildOptions& opts) {
  Graph g;
  GraphAssembler::init(g, opts);
  GraphAssembler::set_n(g, n);
  std::vector<ExternalId>& ids = GraphAssembler::ext_ids(g);
  ids.resize(n);
  for (VertexId v = 0; v < n; ++v) ids[v] = v;

  std::vector<PendingEdge> pending;
  pending.reserve(edges.size());
  std::uint64_t order = 0;
  for (const EdgeInput& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("vertex id out of range");
    if (opts.weighted && !(e.w.value_or(0.0) > 0.0))
      throw std::invalid_argument("edge weights must be strictly positive");
    VertexId u = static_cast<VertexId>(e.u);
    VertexId v = static_cast<VertexId>(e.v);
    if (u == v) continue;
    PendingEdge p{u, v, u, v, e.w.value_or(1.0), order++};
    if (!opts.directed && p.u > p.v) std::swap(p.u, p.v);
    pending.push_back(p);
  }
  std::vector<RawEdge> arcs = resolve_duplicates(pending, opts, ids);
  GraphAssembler::assemble(g, arcs, opts);
  return g;
}

double Graph::total_strength() const {
  if (!weighted_) return static_cast<double>(num_arcs());
  double s = 0.0;
  for (double w : wts_) s += w;
  return s;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> Graph::internal_id(ExternalId ext) const {
  for (VertexId v = 0; v < n_; ++v)
    if (ext_ids_[v] == ext) return v;
  return std::nullopt;
}

Graph to_undirected(const Graph& g) {
  if (!g.directed()) return g;
  // Opposite arcs collapse by weight summation: preserves the total weight
  // mass consumed by the weighted measures.
  std::map<std::pair<ExternalId, ExternalId>, double> collapsed;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      ExternalId eu = g.external_id(u), ev = g.external_id(nb[i]);
      if (eu > ev) std::swap(eu, ev);
      collapsed[{eu, ev}] += g.edge_weight_at(u, i);
    }
  }
  std::vector<EdgeInput> edges;
  edges.reserve(collapsed.size());
  for (const auto& [pair, w] : collapsed) {
    EdgeInput e{pair.first, pair.second, std::nullopt};
    if (g.weighted()) e.w = w;
    edges.push_back(e);
  }
  BuildOptions opts{false, g.weighted(), DuplicatePolicy::Strict};
  return build_graph(edges, opts, g.external_ids());
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<std::int64_t> remap(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices()) throw std::invalid_argument("unknown vertex id");
    remap[vertices[i]] = static_cast<std::int64_t>(i);
  }

  std::vector<EdgeInput> edges;
  for (VertexId u : vertices) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      VertexId v = nb[i];
      if (remap[v] < 0) continue;
      if (!g.directed() && remap[u] > remap[v]) continue;
      EdgeInput e{static_cast<ExternalId>(remap[u]), static_cast<ExternalId>(remap[v]),
                  std::nullopt};
      if (g.weighted()) e.w = g.edge_weight_at(u, i);
      edges.push_back(e);
    }
  }
  BuildOptions opts{g.directed(), g.weighted(), DuplicatePolicy::Strict};
  Graph sub = build_graph_dense(static_cast<VertexId>(vertices.size()), edges, opts);
  std::vector<ExternalId>& sub_ids = GraphAssembler::ext_ids(sub);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    sub_ids[i] = g.external_id(vertices[i]);
  return sub;
}

bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.directed() != b.directed() || a.weighted() != b.weighted()) return false;
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;

  std::vector<ExternalId> va = a.external_ids(), vb = b.external_ids();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) return false;

  using Ext = std::tuple<ExternalId, ExternalId, double>;
  auto edge_set = [](const Graph& g) {
    std::vector<Ext> out;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
      auto nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        ExternalId eu = g.external_id(u), ev = g.external_id(nb[i]);
        if (!g.directed() && eu > ev) continue;
        out.emplace_back(eu, ev, g.edge_weight_at(u, i));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return edge_set(a) == edge_set(b);
}

}  // namespace gclust
