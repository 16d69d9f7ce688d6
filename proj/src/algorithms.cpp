#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "gclust/algorithms.hpp"

namespace gclust {

namespace {

// Built-in algorithms treat directed input as its undirected projection, so
// the directed-support probe correctly reports them as direction-blind.
const Graph& as_undirected(const Graph& g, Graph& storage) {
  if (!g.directed()) return g;
  storage = to_undirected(g);
  return storage;
}

std::vector<AlgorithmHandle> make_registry() {
  std::vector<AlgorithmHandle> algs;

  algs.push_back({"lpa", true, false, false,
                  [](const Graph& g, std::uint64_t seed, std::int64_t) {
                    Graph tmp;
                    return lpa(as_undirected(g, tmp), seed);
                  }});
  algs.push_back({"lpa_unweighted", false, false, false,
                  [](const Graph& g, std::uint64_t seed, std::int64_t) {
                    Graph tmp;
                    return lpa_unweighted(as_undirected(g, tmp), seed);
                  }});
  algs.push_back({"louvain", true, false, false,
                  [](const Graph& g, std::uint64_t seed, std::int64_t) {
                    Graph tmp;
                    return louvain(as_undirected(g, tmp), seed);
                  }});
  algs.push_back({"cnm", false, false, false,
                  [](const Graph& g, std::uint64_t, std::int64_t) {
                    Graph tmp;
                    return greedy_cnm(as_undirected(g, tmp));
                  }});
  algs.push_back({"gce", false, false, true,
                  [](const Graph& g, std::uint64_t, std::int64_t) {
                    Graph tmp;
                    return gce(as_undirected(g, tmp));
                  }});

  // Harness test stubs.
  algs.push_back({"_sleep", false, false, false,
                  [](const Graph& g, std::uint64_t, std::int64_t budget_ms) {
                    std::this_thread::sleep_for(
                        std::chrono::milliseconds(budget_ms > 0 ? budget_ms + 400 : 1000));
                    std::vector<ClusterId> label(g.num_vertices());
                    for (VertexId v = 0; v < g.num_vertices(); ++v) label[v] = v;
                    return Clustering::from_labels(label);
                  }});
  algs.push_back({"_crash", false, false, false,
                  [](const Graph&, std::uint64_t, std::int64_t) -> Clustering {
                    std::abort();
                  }});
  return algs;
}

}  // namespace

const std::vector<AlgorithmHandle>& algorithm_registry() {
  static const std::vector<AlgorithmHandle> registry = make_registry();
  return registry;
}

const AlgorithmHandle& find_algorithm(const std::string& name) {
  for (const AlgorithmHandle& a : algorithm_registry())
    if (a.name == name) return a;
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace gclust
