#pragma once

#include <cstdint>
#include <vector>

#include "gclust/graph.hpp"

namespace gclust {

// Whole-graph structural profile. Shortest paths are hop counts (weights are
// ignored for distances); on disconnected graphs the diameter family is
// computed over finite distances only.
struct GraphProfile {
  double density = 0.0;
  std::uint32_t diameter = 0;
  double effective_diameter = 0.0;  // 90th percentile, linear interpolation
  double global_cc = 0.0;
  double avg_local_cc = 0.0;
  bool sampled = false;  // effective/diameter estimated from sampled BFS sources
};

struct VertexCentrality {
  double degree_centrality = 0.0;
  double farness = 0.0;    // mean hop distance to reachable same-component vertices
  double closeness = 0.0;  // 1/farness, 0 for isolated vertices
};

inline constexpr VertexId kExactDiameterThreshold = 2000;
inline constexpr std::uint32_t kDefaultDiameterSamples = 256;

// m / (n(n-1)) with m the directed-arc count (both orientations for
// undirected graphs), so a complete undirected graph scores 1. n >= 2.
double density(const Graph& g);

// (diameter, effective diameter). Exact all-pairs BFS when
// n <= kExactDiameterThreshold, otherwise BFS from `sample_size` seeded
// random sources.
std::pair<std::uint32_t, double> diameters(const Graph& g,
                                           std::uint32_t sample_size = kDefaultDiameterSamples,
                                           std::uint64_t seed = 1);

// Per-vertex degree centrality, farness, closeness. Runs one BFS per vertex.
std::vector<VertexCentrality> centralities(const Graph& g);

// Max hop distance from v within its component.
std::uint32_t eccentricity(const Graph& g, VertexId v);
std::vector<std::uint32_t> eccentricities(const Graph& g);

// (global clustering coefficient, per-vertex local coefficients).
// global = 3 * triangles / connected triplets; local(v) = 0 when deg(v) < 2.
// Undirected graphs only.
std::pair<double, std::vector<double>> clustering_coefficients(const Graph& g);

GraphProfile profile(const Graph& g, std::uint32_t sample_size = kDefaultDiameterSamples,
                     std::uint64_t seed = 1);

}  // namespace gclust
