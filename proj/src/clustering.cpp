#include "gclust/clustering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "gclust/rng.hpp"

namespace gclust {

Clustering Clustering::from_labels(const std::vector<ClusterId>& labels) {
  std::unordered_map<ClusterId, ClusterId> dense;
  std::vector<std::vector<VertexId>> clusters;
  for (VertexId v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = dense.try_emplace(labels[v], static_cast<ClusterId>(clusters.size()));
    if (fresh) clusters.emplace_back();
    clusters[it->second].push_back(v);
  }
  return from_clusters(static_cast<VertexId>(labels.size()), std::move(clusters));
}

Clustering Clustering::from_clusters(VertexId n,
                                     std::vector<std::vector<VertexId>> clusters) {
  Clustering c;
  c.n_ = n;
  c.memberships_.assign(n, {});

  // Drop empty clusters, keep the rest in order.
  for (auto& members : clusters) {
    if (members.empty()) continue;
    ClusterId id = static_cast<ClusterId>(c.clusters_.size());
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      VertexId v = members[i];
      if (v >= n) throw std::invalid_argument("cluster references unknown vertex");
      if (i > 0 && members[i - 1] == v)
        throw std::invalid_argument("vertex repeated within one cluster");
      c.memberships_[v].push_back(id);
    }
    c.clusters_.push_back(std::move(members));
  }

  for (VertexId v = 0; v < n; ++v) {
    if (c.memberships_[v].empty())
      throw std::invalid_argument("vertex " + std::to_string(v) + " belongs to no cluster");
    if (c.memberships_[v].size() > 1) c.overlapped_ = true;
  }

  c.ext_ids_.resize(n);
  for (VertexId v = 0; v < n; ++v) c.ext_ids_[v] = v;
  return c;
}

std::vector<ClusterId> Clustering::labels() const {
  if (overlapped_) throw std::logic_error("labels() requires a crisp clustering");
  std::vector<ClusterId> out(n_);
  for (VertexId v = 0; v < n_; ++v) out[v] = memberships_[v].front();
  return out;
}

void Clustering::set_external_ids(std::vector<ExternalId> ids) {
  if (ids.size() != n_) throw std::invalid_argument("external id count mismatch");
  ext_ids_ = std::move(ids);
}

Clustering crispify(const Clustering& c, std::uint64_t seed) {
  if (!c.overlapped()) return c;
  Rng rng(seed);
  std::vector<ClusterId> labels(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    const auto& mem = c.memberships_of(v);
    labels[v] = mem.size() == 1 ? mem.front() : mem[rng.index(mem.size())];
  }
  Clustering out = Clustering::from_labels(labels);
  out.set_external_ids(c.external_ids());
  return out;
}

bool same_partition(const Clustering& a, const Clustering& b) {
  if (a.overlapped() || b.overlapped()) throw std::invalid_argument("crisp input required");
  if (a.num_vertices() != b.num_vertices()) return false;
  if (a.num_clusters() != b.num_clusters()) return false;
  std::unordered_map<ClusterId, ClusterId> map;
  std::vector<bool> hit(b.num_clusters(), false);
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    ClusterId la = a.label(v), lb = b.label(v);
    auto [it, fresh] = map.try_emplace(la, lb);
    if (fresh) {
      if (hit[lb]) return false;
      hit[lb] = true;
    } else if (it->second != lb) {
      return false;
    }
  }
  return true;
}

}  // namespace gclust
