#include <set>

#include "doctest.h"
#include "gclust/generators.hpp"
#include "gclust/props.hpp"

using namespace gclust;

namespace {

// Mean over vertices of (neighbors outside own truth community) / degree.
double realized_mixing(const BenchmarkInstance& inst) {
  std::vector<ClusterId> label(inst.graph.num_vertices());
  for (ClusterId c = 0; c < inst.truth.num_clusters(); ++c)
    for (VertexId v : inst.truth.cluster(c)) label[v] = c;
  double total = 0.0;
  std::uint64_t counted = 0;
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    std::uint32_t deg = inst.graph.degree(v);
    if (deg == 0) continue;
    std::uint32_t ext = 0;
    for (VertexId u : inst.graph.neighbors(v))
      if (label[u] != label[v]) ++ext;
    total += static_cast<double>(ext) / deg;
    ++counted;
  }
  return counted == 0 ? 0.0 : total / static_cast<double>(counted);
}

bool connected(const Graph& g, const std::vector<VertexId>& verts) {
  if (verts.empty()) return true;
  std::set<VertexId> in(verts.begin(), verts.end()), seen;
  std::vector<VertexId> stack{verts[0]};
  seen.insert(verts[0]);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v))
      if (in.count(u) && !seen.count(u)) {
        seen.insert(u);
        stack.push_back(u);
      }
  }
  return seen.size() == verts.size();
}

}  // namespace

TEST_CASE("gen_random") {
  SUBCASE("forced complete graph") {
    BenchmarkInstance inst = gen_random(10, 45, 1);
    CHECK(inst.graph.num_edges() == 45);
    CHECK(density(inst.graph) == doctest::Approx(1.0));
  }
  SUBCASE("empty graph keeps its vertices") {
    BenchmarkInstance inst = gen_random(10, 0, 1);
    CHECK(inst.graph.num_vertices() == 10);
    CHECK(inst.graph.num_edges() == 0);
    CHECK(inst.truth.num_clusters() == 1);
  }
  SUBCASE("deterministic given seed, distinct across seeds") {
    Graph a = gen_random(1000, 5000, 42).graph;
    Graph b = gen_random(1000, 5000, 42).graph;
    CHECK(graphs_equal(a, b));
    int distinct = 0;
    for (std::uint64_t s = 0; s < 10; ++s)
      if (!graphs_equal(a, gen_random(1000, 5000, 100 + s).graph)) ++distinct;
    CHECK(distinct == 10);
  }
  SUBCASE("m over the maximum rejected") {
    CHECK_THROWS_AS(gen_random(10, 46, 1), std::invalid_argument);
  }
}

TEST_CASE("gen_simple") {
  SUBCASE("counts of the 4x8 ki=3 ko=1 configuration") {
    BenchmarkInstance inst = gen_simple(4, 8, 3, 1, 7);
    CHECK(inst.graph.num_vertices() == 32);
    CHECK(inst.graph.num_edges() == 48 + 6);
    CHECK(inst.truth.num_clusters() == 4);
  }
  SUBCASE("ki = cz-1 with ko = 0 forces disjoint cliques") {
    BenchmarkInstance inst = gen_simple(2, 4, 3, 0, 3);
    CHECK(inst.graph.num_edges() == 12);
    for (VertexId v = 0; v < 8; ++v) CHECK(inst.graph.degree(v) == 3);
  }
  SUBCASE("gamma accessor") {
    BenchmarkInstance inst = gen_simple(8, 16, 6, 3, 1);
    CHECK(inst.spec.gamma().value() == doctest::Approx(0.5));
  }
  SUBCASE("exact internal degree and inter-edge counts") {
    for (std::uint64_t seed : {1, 2, 3}) {
      std::uint32_t nc = 6, cz = 16, ki = 5, ko = 4;
      BenchmarkInstance inst = gen_simple(nc, cz, ki, ko, seed);
      std::vector<ClusterId> label(inst.graph.num_vertices());
      for (ClusterId c = 0; c < nc; ++c)
        for (VertexId v : inst.truth.cluster(c)) label[v] = c;
      std::vector<std::vector<std::uint32_t>> cross(nc, std::vector<std::uint32_t>(nc, 0));
      for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
        std::uint32_t internal = 0;
        for (VertexId u : inst.graph.neighbors(v)) {
          if (label[u] == label[v])
            ++internal;
          else
            ++cross[label[v]][label[u]];
        }
        CHECK(internal == ki);
      }
      for (std::uint32_t a = 0; a < nc; ++a)
        for (std::uint32_t b = a + 1; b < nc; ++b) CHECK(cross[a][b] == ko);
    }
  }
  SUBCASE("determinism and seed sensitivity") {
    Graph a = gen_simple(8, 16, 6, 1, 5).graph;
    CHECK(graphs_equal(a, gen_simple(8, 16, 6, 1, 5).graph));
    CHECK_FALSE(graphs_equal(a, gen_simple(8, 16, 6, 1, 6).graph));
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(gen_simple(4, 8, 8, 1, 1), std::invalid_argument);   // ki >= cz
    CHECK_THROWS_AS(gen_simple(4, 5, 3, 1, 1), std::invalid_argument);   // ki*cz odd
    CHECK_THROWS_AS(gen_simple(4, 8, 3, 65, 1), std::invalid_argument);  // ko > cz^2
  }
}

TEST_CASE("gen_lfr") {
  SUBCASE("paper's smallest quality configuration") {
    BenchmarkInstance inst = gen_lfr({128, 32, 64, 0.1}, 3);
    CHECK(inst.graph.num_vertices() == 128);
    CHECK(inst.truth.num_clusters() >= 2);
    double mix = realized_mixing(inst);
    CHECK(mix > 0.0);
    CHECK(mix < 0.25);
  }
  SUBCASE("mu = 0 gives internally wired connected modules") {
    BenchmarkInstance inst = gen_lfr({128, 32, 64, 0.0}, 9);
    CHECK(realized_mixing(inst) == doctest::Approx(0.0));
    for (ClusterId c = 0; c < inst.truth.num_clusters(); ++c)
      CHECK(connected(inst.graph, inst.truth.cluster(c)));
  }
  SUBCASE("mixing fidelity at N=512") {
    for (double mu : {0.2, 0.4}) {
      LfrParams p{512, 128, 256, mu};
      double mix = realized_mixing(gen_lfr(p, 11));
      CHECK(std::abs(mix - mu) < 0.05);
    }
  }
  SUBCASE("realized mixing near mu at the benchmark size") {
    LfrParams p{1024, 256, 512, 0.5};
    double mix = realized_mixing(gen_lfr(p, 4));
    CHECK(std::abs(mix - 0.5) < 0.05);
  }
  SUBCASE("deterministic given seed") {
    LfrParams p{256, 32, 64, 0.3};
    CHECK(graphs_equal(gen_lfr(p, 12).graph, gen_lfr(p, 12).graph));
    CHECK_FALSE(graphs_equal(gen_lfr(p, 12).graph, gen_lfr(p, 13).graph));
  }
  SUBCASE("infeasible parameters report the failed constraint") {
    LfrParams p{64, 32, 48, 0.5};
    p.minc = 40;  // mu > 0 needs two communities but 2*minc > n
    CHECK_THROWS_WITH_AS(gen_lfr(p, 1), doctest::Contains("minc > maxc"),
                         std::invalid_argument);
  }
}

TEST_CASE("gen_wlfr") {
  WlfrParams p{{512, 16, 32, 0.3}, 0.4, 1.5};
  BenchmarkInstance inst = gen_wlfr(p, 21);
  CHECK(inst.graph.weighted());

  // total external weight / total weight within 0.05 of mu_t
  std::vector<ClusterId> label(inst.graph.num_vertices());
  for (ClusterId c = 0; c < inst.truth.num_clusters(); ++c)
    for (VertexId v : inst.truth.cluster(c)) label[v] = c;
  double ext = 0.0, total = 0.0;
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    auto nb = inst.graph.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      double w = inst.graph.edge_weight_at(v, i);
      total += w;
      if (label[nb[i]] != label[v]) ext += w;
    }
  }
  CHECK(std::abs(ext / total - p.mu_t) < 0.05);
}

TEST_CASE("generator spec json round trip") {
  GeneratorSpec spec{SimpleParams{8, 16, 6, 1}, 7};
  std::string j = spec.to_json(128, 390);
  GeneratorSpec back = GeneratorSpec::from_json(j);
  CHECK(back.kind() == "SIMPLE");
  CHECK(back.seed == 7);
  CHECK(back.cz().value() == 16);
  CHECK(back.name() == "SIMPLE(8,16,6,1)");

  GeneratorSpec lfr{LfrParams{1024, 256, 512, 0.3}, 9};
  GeneratorSpec lback = GeneratorSpec::from_json(lfr.to_json(0, 0));
  CHECK(lback.mu().value() == doctest::Approx(0.3));
  CHECK(GeneratorSpec::from_name("LFR(1024,256,512,0.3)").mu().value() ==
        doctest::Approx(0.3));
}
