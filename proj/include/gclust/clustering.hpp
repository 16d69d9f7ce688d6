#pragma once

#include <cstdint>
#include <vector>

#include "gclust/graph.hpp"

namespace gclust {

using ClusterId = std::uint32_t;

// Assignment of vertices to one or more clusters. `memberships` and
// `clusters` are mutually consistent inversions; every vertex belongs to at
// least one cluster, and overlapped() is false iff every vertex has exactly
// one. Cluster ids are dense 0..k-1 (empty clusters are dropped on
// construction). Immutable after construction.
class Clustering {
 public:
  Clustering() = default;

  // Crisp clustering from one label per vertex. Labels need not be dense.
  static Clustering from_labels(const std::vector<ClusterId>& labels);
  // General form: per-cluster vertex lists over vertices 0..n-1.
  static Clustering from_clusters(VertexId n, std::vector<std::vector<VertexId>> clusters);

  VertexId num_vertices() const { return n_; }
  std::size_t num_clusters() const { return clusters_.size(); }
  bool overlapped() const { return overlapped_; }

  const std::vector<VertexId>& cluster(ClusterId c) const { return clusters_[c]; }
  const std::vector<std::vector<VertexId>>& clusters() const { return clusters_; }
  const std::vector<ClusterId>& memberships_of(VertexId v) const { return memberships_[v]; }

  // Single label of a vertex; requires a crisp clustering.
  ClusterId label(VertexId v) const { return memberships_[v].front(); }
  std::vector<ClusterId> labels() const;

  // External vertex ids, parallel to 0..n-1. Identity when never set.
  const std::vector<ExternalId>& external_ids() const { return ext_ids_; }
  void set_external_ids(std::vector<ExternalId> ids);

 private:
  VertexId n_ = 0;
  bool overlapped_ = false;
  std::vector<std::vector<ClusterId>> memberships_;
  std::vector<std::vector<VertexId>> clusters_;
  std::vector<ExternalId> ext_ids_;
};

// Collapses an overlapping clustering to a crisp one by keeping, for every
// vertex, one of its labels chosen uniformly at random (seeded). Crisp input
// is returned unchanged. Deterministic given seed.
Clustering crispify(const Clustering& c, std::uint64_t seed);

// True iff the two clusterings are the same partition up to cluster
// relabeling (both must be crisp).
bool same_partition(const Clustering& a, const Clustering& b);

}  // namespace gclust
