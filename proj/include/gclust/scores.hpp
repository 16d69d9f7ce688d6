#pragma once

#include <cstdint>
#include <vector>

#include "gclust/clustering.hpp"

namespace gclust {

// Cluster-overlap counts between two crisp clusterings over the same vertex
// universe; the substrate of every score measure. Cells are sparse
// (nonzero only).
struct ContingencyTable {
  struct Cell {
    std::uint32_t row, col;
    std::uint64_t count;
  };
  std::vector<std::uint64_t> row_sums;  // |A_i|
  std::vector<std::uint64_t> col_sums;  // |B_j|
  std::vector<Cell> cells;
  std::uint64_t n = 0;
};

ContingencyTable contingency(const Clustering& a, const Clustering& b);

// Entropy of a marginal in nats.
double entropy(const std::vector<std::uint64_t>& sums, std::uint64_t n);

// Mutual information in nats (natural log throughout; NMI/AMI/V are
// base-invariant).
double mutual_information(const ContingencyTable& t);
double mutual_information(const Clustering& a, const Clustering& b);

// 2*MI/(H(A)+H(B)); both entropies zero -> 1, exactly one zero -> 0.
double nmi(const Clustering& a, const Clustering& b);

// Expected MI under the permutation model with fixed marginals, via
// log-gamma hypergeometric terms and compensated summation.
double expected_mi(const ContingencyTable& t);

// (MI - EMI) / (mean(H(A),H(B)) - EMI); zero denominator -> 1 if the
// partitions are identical up to relabeling, else 0.
double ami(const Clustering& a, const Clustering& b);

// (rand_index, adjusted_rand) by pair counting over C(n,2) vertex pairs.
std::pair<double, double> rand_scores(const Clustering& a, const Clustering& b);

struct VMeasure {
  double homogeneity;
  double completeness;
  double v;
};
// truth is A, candidate is C. paper_literal drops the factor 2 of the
// harmonic mean, as printed.
VMeasure v_measure(const Clustering& truth, const Clustering& cand,
                   bool paper_literal = false);

struct ScoreReport {
  double mi, nmi, ami, ri, ars, homogeneity, completeness, v_measure;
};
ScoreReport score_all(const Clustering& truth, const Clustering& pred,
                      bool paper_literal = false);

}  // namespace gclust
