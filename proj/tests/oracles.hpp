// Test-only brute-force oracles, kept independent of the library's
// implementation paths: direct probability sums, explicit pair enumeration,
// permutation-averaged expected MI, dense-matrix modularity, Floyd-Warshall
// distances, and triple enumeration for clustering coefficients.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "gclust/graph.hpp"

namespace oracle {

using Labels = std::vector<std::uint32_t>;

// All partitions of {0..n-1} as label vectors, via restricted growth strings.
inline std::vector<Labels> all_partitions(std::uint32_t n) {
  std::vector<Labels> out;
  Labels a(n, 0);
  std::vector<std::uint32_t> maxima(n, 0);
  // iterate restricted growth strings: a[0]=0, a[i] <= max(a[0..i-1])+1
  for (;;) {
    out.push_back(a);
    std::int64_t i = n - 1;
    for (; i > 0; --i) {
      std::uint32_t cap = 0;
      for (std::int64_t j = 0; j < i; ++j) cap = std::max(cap, a[j]);
      if (a[i] <= cap) break;
    }
    if (i == 0) break;
    a[i]++;
    for (std::uint32_t j = i + 1; j < n; ++j) a[j] = 0;
  }
  return out;
}

inline double entropy(const Labels& x) {
  std::map<std::uint32_t, double> cnt;
  for (auto l : x) cnt[l] += 1.0;
  double h = 0.0, n = static_cast<double>(x.size());
  for (auto& [l, c] : cnt) h -= c / n * std::log(c / n);
  return h;
}

inline double mutual_information(const Labels& a, const Labels& b) {
  std::map<std::uint32_t, double> pa, pb;
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> pab;
  double n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa[a[i]] += 1.0;
    pb[b[i]] += 1.0;
    pab[{a[i], b[i]}] += 1.0;
  }
  double mi = 0.0;
  for (auto& [key, c] : pab) {
    double pj = c / n;
    mi += pj * std::log(pj / ((pa[key.first] / n) * (pb[key.second] / n)));
  }
  return mi;
}

inline double nmi(const Labels& a, const Labels& b) {
  double ha = entropy(a), hb = entropy(b);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;
  return 2.0 * mutual_information(a, b) / (ha + hb);
}

struct PairCounts {
  double both = 0;    // co-clustered in a and in b
  double in_a = 0;    // co-clustered in a
  double in_b = 0;
  double pairs = 0;
};

inline PairCounts count_pairs(const Labels& a, const Labels& b) {
  PairCounts c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      bool sa = a[i] == a[j], sb = b[i] == b[j];
      c.pairs += 1;
      if (sa) c.in_a += 1;
      if (sb) c.in_b += 1;
      if (sa && sb) c.both += 1;
    }
  }
  return c;
}

inline double rand_index(const Labels& a, const Labels& b) {
  PairCounts c = count_pairs(a, b);
  double agree = c.both + (c.pairs - c.in_a - c.in_b + c.both);  // TP + TN
  return agree / c.pairs;
}

inline bool same_partition(const Labels& a, const Labels& b) {
  std::map<std::uint32_t, std::uint32_t> f, g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it1, fresh1] = f.try_emplace(a[i], b[i]);
    if (it1->second != b[i]) return false;
    auto [it2, fresh2] = g.try_emplace(b[i], a[i]);
    if (it2->second != a[i]) return false;
  }
  return true;
}

inline double adjusted_rand(const Labels& a, const Labels& b) {
  PairCounts c = count_pairs(a, b);
  double expected = c.in_a * c.in_b / c.pairs;
  double maximum = 0.5 * (c.in_a + c.in_b);
  if (std::abs(maximum - expected) < 1e-12) return same_partition(a, b) ? 1.0 : 0.0;
  return (c.both - expected) / (maximum - expected);
}

// Expected MI as the exact mean over all n! relabelings of the elements of b
// (the permutation model itself, with no hypergeometric shortcut).
inline double expected_mi_permutations(const Labels& a, const Labels& b) {
  Labels perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  std::uint64_t count = 0;
  Labels shuffled(b.size());
  do {
    for (std::size_t i = 0; i < b.size(); ++i) shuffled[i] = b[perm[i]];
    total += mutual_information(a, shuffled);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / static_cast<double>(count);
}

inline double ami(const Labels& a, const Labels& b) {
  double mi = mutual_information(a, b);
  double emi = expected_mi_permutations(a, b);
  double denom = 0.5 * (entropy(a) + entropy(b)) - emi;
  if (std::abs(denom) < 1e-12) return same_partition(a, b) ? 1.0 : 0.0;
  return (mi - emi) / denom;
}

inline double conditional_entropy(const Labels& x, const Labels& given) {
  // H(X | G) by direct double sum
  std::map<std::uint32_t, double> pg;
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> joint;
  double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    pg[given[i]] += 1.0;
    joint[{x[i], given[i]}] += 1.0;
  }
  double h = 0.0;
  for (auto& [key, c] : joint) h -= c / n * std::log((c / n) / (pg[key.second] / n));
  return h;
}

struct VOracle {
  double homogeneity, completeness, v;
};
inline VOracle v_measure(const Labels& truth, const Labels& cand, bool paper_literal = false) {
  double ha = entropy(truth), hc = entropy(cand);
  double h = ha == 0.0 ? 1.0 : 1.0 - conditional_entropy(truth, cand) / ha;
  double c = hc == 0.0 ? 1.0 : 1.0 - conditional_entropy(cand, truth) / hc;
  double v = (h + c) == 0.0 ? 0.0 : (paper_literal ? 1.0 : 2.0) * h * c / (h + c);
  return {h, c, v};
}

// Dense-matrix modularity: (1/A) sum_ij (A_ij - k_i k_j / A) [c_i == c_j].
inline double modularity_matrix(const gclust::Graph& g, const Labels& labels) {
  std::size_t n = g.num_vertices();
  std::vector<std::vector<double>> adj(n, std::vector<double>(n, 0.0));
  for (gclust::VertexId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) adj[v][nb[i]] += g.edge_weight_at(v, i);
  }
  std::vector<double> k(n, 0.0);
  double a_total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += adj[i][j];
      a_total += adj[i][j];
    }
  double q = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (labels[i] == labels[j]) q += adj[i][j] - k[i] * k[j] / a_total;
  return q / a_total;
}

// Hop distances by Floyd-Warshall; -1 marks unreachable.
inline std::vector<std::vector<std::int64_t>> all_distances(const gclust::Graph& g) {
  std::size_t n = g.num_vertices();
  constexpr std::int64_t inf = 1 << 29;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (gclust::VertexId v = 0; v < n; ++v)
    for (gclust::VertexId u : g.neighbors(v)) d[v][u] = 1;
  for (std::size_t k2 = 0; k2 < n; ++k2)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k2] + d[k2][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

struct TripletCounts {
  std::uint64_t connected = 0;
  std::uint64_t closed = 0;  // closed paths of length 2 (= 3 * triangles)
};
inline TripletCounts count_triplets(const gclust::Graph& g) {
  TripletCounts t;
  std::size_t n = g.num_vertices();
  for (gclust::VertexId center = 0; center < n; ++center)
    for (gclust::VertexId u = 0; u < n; ++u)
      for (gclust::VertexId w = u + 1; w < n; ++w) {
        if (u == center || w == center) continue;
        if (g.has_edge(center, u) && g.has_edge(center, w)) {
          t.connected++;
          if (g.has_edge(u, w)) t.closed++;
        }
      }
  return t;
}

// Per-cluster structural sums by plain edge enumeration.
struct ClusterSums {
  double intra_ordered = 0;  // ordered adjacent pairs inside
  double out = 0;            // adjacent pairs leaving
  std::uint64_t edges_inside = 0;
};
inline ClusterSums cluster_sums(const gclust::Graph& g, const std::vector<char>& in) {
  ClusterSums s;
  for (gclust::VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!in[v]) continue;
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      double w = g.edge_weight_at(v, i);
      if (in[nb[i]]) {
        s.intra_ordered += w;
        if (v < nb[i]) s.edges_inside++;
      } else {
        s.out += w;
      }
    }
  }
  return s;
}

}  // namespace oracle
