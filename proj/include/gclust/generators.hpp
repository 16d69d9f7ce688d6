#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gclust/clustering.hpp"
#include "gclust/graph.hpp"

namespace gclust {

struct RandParams {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
};

struct SimpleParams {
  std::uint32_t nc = 0;  // number of clusters
  std::uint32_t cz = 0;  // cluster size
  std::uint32_t ki = 0;  // internal degree of every vertex
  std::uint32_t ko = 0;  // inter-edges between every cluster pair
  double gamma() const { return ki == 0 ? 0.0 : static_cast<double>(ko) / ki; }
};

struct LfrParams {
  std::uint32_t n = 0;
  double k = 0.0;            // target average degree
  std::uint32_t max_k = 0;   // maximum degree
  double mu = 0.0;           // topological mixing
  double tau1 = 2.0;         // degree exponent
  double tau2 = 1.0;         // community-size exponent
  std::uint32_t minc = 0;    // 0 -> default max(round(k), n/50)
  std::uint32_t maxc = 0;    // 0 -> default 2*max_k
};

struct WlfrParams {
  LfrParams lfr;
  double mu_t = 0.0;  // weight mixing
  double beta = 1.5;  // strength exponent: strength(v) = deg(v)^beta
};

struct GeneratorSpec {
  std::variant<RandParams, SimpleParams, LfrParams, WlfrParams> params;
  std::uint64_t seed = 0;

  std::string kind() const;
  std::string name() const;  // e.g. "SIMPLE(8,16,6,1)"
  std::optional<double> mu() const;
  std::optional<std::uint32_t> cz() const;
  std::optional<double> gamma() const;

  std::string to_json(std::uint64_t realized_n, std::uint64_t realized_m) const;
  static GeneratorSpec from_json(const std::string& text);
  // Parses the name() form, e.g. "SIMPLE(8,16,6,1)"; LFR defaults apply.
  static GeneratorSpec from_name(const std::string& name);
};

struct BenchmarkInstance {
  Graph graph;
  Clustering truth;
  GeneratorSpec spec;
};

// n vertices, m distinct edges sampled uniformly without replacement.
// Truth is a single cluster (a random graph carries no structure).
BenchmarkInstance gen_random(std::uint64_t n, std::uint64_t m, std::uint64_t seed);

// nc disjoint clusters of cz vertices; every vertex has internal degree
// exactly ki (random ki-regular intra subgraph) and every unordered cluster
// pair is joined by exactly ko inter-edges with uniformly chosen endpoints
// (duplicate pairs forbidden, shared endpoints allowed).
BenchmarkInstance gen_simple(std::uint32_t nc, std::uint32_t cz, std::uint32_t ki,
                             std::uint32_t ko, std::uint64_t seed);

// LFR-style planted-community graph: truncated power-law degrees (mean ~ k,
// max = max_k), power-law community sizes in [minc, maxc], and ~mu of every
// vertex's edges wired outside its community via configuration-model pairing
// with rewiring repair.
BenchmarkInstance gen_lfr(const LfrParams& p, std::uint64_t seed);

// Weighted variant: on top of the LFR topology, each vertex distributes
// strength deg(v)^beta over its edges so that ~mu_t of total weight falls on
// inter-community edges.
BenchmarkInstance gen_wlfr(const WlfrParams& p, std::uint64_t seed);

BenchmarkInstance generate(const GeneratorSpec& spec);

}  // namespace gclust
