#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gclust/clustering.hpp"
#include "gclust/graph.hpp"

namespace gclust {

// Label propagation: asynchronous sweeps in seeded random order, weighted
// majority vote among neighbors, random tie-breaks. Stops when a sweep
// changes nothing or max_iters is hit.
Clustering lpa(const Graph& g, std::uint64_t seed, std::uint32_t max_iters = 100);
// Weight-blind variant (treats every edge as weight 1).
Clustering lpa_unweighted(const Graph& g, std::uint64_t seed, std::uint32_t max_iters = 100);

// Louvain: seeded local moves maximizing modularity gain, then aggregation,
// repeated until no improvement.
Clustering louvain(const Graph& g, std::uint64_t seed);

// Clauset-Newman-Moore greedy agglomeration: merge the pair with maximal
// modularity gain until no positive gain remains. Deterministic (ties break
// on the smallest cluster-id pair). Weight-blind.
Clustering greedy_cnm(const Graph& g);

// GCE local fitness F = k_in / (k_in + k_out)^alpha with k_in twice the
// internal edge count and k_out the boundary edge count.
double gce_fitness(const Graph& g, std::span<const VertexId> s, double alpha);

// Greedy clique expansion: grow each seed by the neighbor maximizing F until
// no vertex improves it; near-duplicates (Jaccard >= 0.75) are discarded.
// Vertices left uncovered become singletons. Result may overlap.
Clustering gce_expand(const Graph& g, const std::vector<std::vector<VertexId>>& seeds,
                      double alpha);
// Default pipeline: seeds = maximal cliques of size >= 4 (capped), alpha = 1.
Clustering gce(const Graph& g, double alpha = 1.0);

// Maximal cliques of at least min_size via Bron-Kerbosch with pivoting,
// stopping after `cap` cliques.
std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g, std::size_t min_size,
                                                   std::size_t cap = 100000);

// Two-level map-equation codelength (bits) of a crisp partition: stationary
// visit rates by power iteration with uniform teleportation, module exit
// rates from the non-teleport flow across module boundaries. Evaluator only.
double map_equation_codelength(const Graph& g, const Clustering& cl,
                               double teleport = 0.15);

// Named algorithm with declared capabilities, as probed by the harness.
struct AlgorithmHandle {
  std::string name;
  bool weighted = false;
  bool directed = false;
  bool overlapping = false;
  std::function<Clustering(const Graph&, std::uint64_t seed, std::int64_t budget_ms)> run;
};

// Registry: lpa, lpa_unweighted, louvain, cnm, gce, plus the test stubs
// _sleep (overruns any budget) and _crash (aborts).
const std::vector<AlgorithmHandle>& algorithm_registry();
const AlgorithmHandle& find_algorithm(const std::string& name);

}  // namespace gclust
