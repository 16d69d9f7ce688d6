#pragma once

#include <span>
#include <vector>

#include "gclust/clustering.hpp"
#include "gclust/graph.hpp"

namespace gclust {

// Formula-mode switch. The default fixes the evident typos of the printed
// formulas (intra-density denominator, flake-ODF threshold, normalized-cut
// second denominator, V-measure factor); paper_literal reproduces them
// exactly for cross-checks.
struct FitnessOptions {
  bool paper_literal = false;
  // Used only by paper-literal avg_ODF, whose printed normalizer is the
  // number of clusters; 0 falls back to |c| (the default reading).
  std::size_t clustering_size = 0;
};

struct ClusterFitness {
  double sum_intra_weight = 0;
  double sum_out_weight = 0;
  double expansion = 0;
  double cut_ratio = 0;
  double intra_density = 0;
  double inter_density = 0;
  double relative_density = 0;
  double conductance = 0;
  double normalized_cut = 0;
  double max_odf = 0;
  double avg_odf = 0;
  double flake_odf = 0;
  double separability = 0;
  double global_cc = 0;
  double avg_local_cc = 0;
};

// (sum_intra, sum_out) over ordered pairs: every undirected intra edge
// contributes twice to sum_intra, every cut edge once to sum_out. Weights
// are 1 on unweighted graphs.
std::pair<double, double> weight_summary(const Graph& g, std::span<const VertexId> c);

struct BoundaryMeasures {
  double expansion;
  double cut_ratio;      // NaN when |c| == n
  double conductance;
  double normalized_cut;
  double separability;   // +inf when sum_out == 0 (perfectly separated)
  double relative_density;
};
BoundaryMeasures boundary_measures(const Graph& g, std::span<const VertexId> c,
                                   const FitnessOptions& opts = {});

// (intra_density, inter_density) for cluster index `c` of a crisp
// clustering; structural counts (weights ignored). Corrected mode needs
// |c| >= 2.
std::pair<double, double> density_measures(const Graph& g, const Clustering& cl,
                                           ClusterId c, const FitnessOptions& opts = {});

struct OdfMeasures {
  double max_odf;
  double avg_odf;
  double flake_odf;
};
// Out-degree fractions; every vertex of c must have degree >= 1.
OdfMeasures odf_measures(const Graph& g, std::span<const VertexId> c,
                         const FitnessOptions& opts = {});

// Newman-Girvan modularity of a crisp clustering; weighted graphs use
// weighted degrees.
double modularity(const Graph& g, const Clustering& cl);

// All per-cluster measures of a crisp clustering, one record per cluster.
std::vector<ClusterFitness> cluster_fitness(const Graph& g, const Clustering& cl,
                                            const FitnessOptions& opts = {});

}  // namespace gclust
