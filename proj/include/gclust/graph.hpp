#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gclust {

using VertexId = std::uint32_t;
using ExternalId = std::uint64_t;

// One input edge as supplied by a file or generator. `w` must be empty for
// unweighted graphs and positive for weighted ones.
struct EdgeInput {
  ExternalId u = 0;
  ExternalId v = 0;
  std::optional<double> w;
};

enum class DuplicatePolicy { Strict, LastWins };

struct GraphAssembler;

struct BuildOptions {
  bool directed = false;
  bool weighted = false;
  DuplicatePolicy duplicates = DuplicatePolicy::Strict;
};

// Immutable graph in compressed adjacency form. Neighbor lists are sorted by
// internal vertex id. Undirected graphs store both orientations of every
// edge; `m` counts each undirected edge once. Internal ids are dense
// 0..n-1 in order of first appearance of the external id.
class Graph {
 public:
  Graph() = default;

  VertexId num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return m_; }
  // Total adjacency entries: 2m for undirected graphs, arc count for directed.
  std::uint64_t num_arcs() const { return offsets_.empty() ? 0 : offsets_.back(); }

  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  std::span<const double> weights(VertexId v) const {
    if (!weighted_) return {};
    return {wts_.data() + offsets_[v], wts_.data() + offsets_[v + 1]};
  }

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  // Weighted degree; equals degree() on unweighted graphs.
  double strength(VertexId v) const {
    if (!weighted_) return degree(v);
    double s = 0.0;
    for (double w : weights(v)) s += w;
    return s;
  }
  // Sum of strength over all vertices (2 * total weight for undirected).
  double total_strength() const;

  double edge_weight_at(VertexId v, std::size_t slot) const {
    return weighted_ ? wts_[offsets_[v] + slot] : 1.0;
  }

  bool has_edge(VertexId u, VertexId v) const;

  ExternalId external_id(VertexId v) const { return ext_ids_[v]; }
  const std::vector<ExternalId>& external_ids() const { return ext_ids_; }
  // Internal id for an external id, if present.
  std::optional<VertexId> internal_id(ExternalId ext) const;

 private:
  friend struct GraphAssembler;

  VertexId n_ = 0;
  std::uint64_t m_ = 0;
  bool directed_ = false;
  bool weighted_ = false;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> nbrs_;
  std::vector<double> wts_;
  std::vector<ExternalId> ext_ids_;
};

// Builds a graph from an edge list. Self-loops are dropped. Undirected input
// is symmetrized; duplicate edges follow opts.duplicates. Throws
// std::invalid_argument on contract violations: non-positive weight on a
// weighted graph, or a weight supplied when opts.weighted is false.
// `universe`, when non-empty, pre-registers vertices (in order) so isolated
// vertices survive; endpoints outside a non-empty universe are an error.
Graph build_graph(std::span<const EdgeInput> edges, const BuildOptions& opts,
                  std::span<const ExternalId> universe = {});

// Same, but the vertex set is fixed to external ids 0..n-1 so isolated
// vertices survive. Used by the generators.
Graph build_graph_dense(VertexId n, std::span<const EdgeInput> edges,
                        const BuildOptions& opts);

// Converts a directed graph to undirected. Opposite arcs (u,v)/(v,u)
// collapse into one edge; on weighted graphs their weights are summed.
Graph to_undirected(const Graph& g);

// Subgraph induced by `vertices` (internal ids): exactly the edges with both
// endpoints in the set. Internal ids are remapped densely in the order given;
// external ids carry over. Throws on unknown ids.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

// Structural equality over external ids: same flags, same vertex set, same
// edge set with equal weights. Insensitive to internal id order.
bool graphs_equal(const Graph& a, const Graph& b);

}  // namespace gclust
