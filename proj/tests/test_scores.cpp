#include <cmath>

#include "doctest.h"
#include "gclust/rng.hpp"
#include "gclust/scores.hpp"
#include "oracles.hpp"

using namespace gclust;

namespace {

Clustering from_l(std::vector<ClusterId> labels) { return Clustering::from_labels(labels); }

oracle::Labels to_labels(const Clustering& c) {
  oracle::Labels out(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) out[v] = c.label(v);
  return out;
}

}  // namespace

TEST_CASE("contingency") {
  SUBCASE("identical 2+2 partitions give diag(2,2)") {
    ContingencyTable t = contingency(from_l({0, 0, 1, 1}), from_l({0, 0, 1, 1}));
    REQUIRE(t.cells.size() == 2);
    CHECK(t.cells[0].count == 2);
    CHECK(t.cells[1].count == 2);
    CHECK(t.n == 4);
  }
  SUBCASE("crossing partitions give the all-ones table") {
    ContingencyTable t = contingency(from_l({0, 0, 1, 1}), from_l({0, 1, 0, 1}));
    CHECK(t.cells.size() == 4);
    for (const auto& c : t.cells) CHECK(c.count == 1);
  }
  SUBCASE("single-cluster side gives the row-sums column") {
    ContingencyTable t = contingency(from_l({0, 0, 1, 1}), from_l({0, 0, 0, 0}));
    REQUIRE(t.col_sums.size() == 1);
    CHECK(t.col_sums[0] == 4);
    REQUIRE(t.cells.size() == 2);
  }
  SUBCASE("mismatched universes rejected") {
    CHECK_THROWS_AS(contingency(from_l({0, 1}), from_l({0, 1, 2})), std::invalid_argument);
  }
  SUBCASE("overlapping input rejected") {
    Clustering over = Clustering::from_clusters(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(contingency(over, from_l({0, 1, 2})), std::invalid_argument);
  }
}

TEST_CASE("mutual information") {
  CHECK(mutual_information(from_l({0, 0, 1, 1}), from_l({0, 0, 1, 1})) ==
        doctest::Approx(std::log(2.0)));
  CHECK(mutual_information(from_l({0, 0, 1, 1}), from_l({0, 1, 0, 1})) ==
        doctest::Approx(0.0));
  CHECK(mutual_information(from_l({0, 0, 1, 1}), from_l({0, 0, 0, 0})) ==
        doctest::Approx(0.0));
}

TEST_CASE("nmi") {
  CHECK(nmi(from_l({0, 0, 1, 1}), from_l({1, 1, 0, 0})) == doctest::Approx(1.0));
  CHECK(nmi(from_l({0, 0, 1, 1}), from_l({0, 1, 0, 1})) == doctest::Approx(0.0));
  // refinement case fixed by the entropy oracle: 2 ln2 / (ln2 + 1.5 ln2) = 0.8
  Clustering a = from_l({0, 0, 1, 1});
  Clustering b = from_l({0, 0, 1, 2});
  CHECK(oracle::nmi({0, 0, 1, 1}, {0, 0, 1, 2}) == doctest::Approx(0.8));
  CHECK(nmi(a, b) == doctest::Approx(0.8));
  // degenerate: both trivial
  CHECK(nmi(from_l({0, 0}), from_l({0, 0})) == doctest::Approx(1.0));
}

TEST_CASE("ami") {
  SUBCASE("identical partitions") {
    CHECK(ami(from_l({0, 0, 1, 1}), from_l({1, 1, 0, 0})) == doctest::Approx(1.0));
  }
  SUBCASE("all-ones 2x2 table: EMI from exhaustive permutation enumeration") {
    Clustering a = from_l({0, 0, 1, 1});
    Clustering b = from_l({0, 1, 0, 1});
    double emi_want = oracle::expected_mi_permutations({0, 0, 1, 1}, {0, 1, 0, 1});
    CHECK(expected_mi(contingency(a, b)) == doctest::Approx(emi_want).epsilon(1e-9));
    double want = (0.0 - emi_want) / (std::log(2.0) - emi_want);
    CHECK(want == doctest::Approx(-0.5));
    CHECK(ami(a, b) == doctest::Approx(-0.5).epsilon(1e-9));
  }
  SUBCASE("oracle equivalence on 5-element partitions") {
    auto parts = oracle::all_partitions(5);
    for (std::size_t i = 0; i < parts.size(); i += 7) {
      for (std::size_t j = 0; j < parts.size(); j += 5) {
        Clustering a = from_l(parts[i]);
        Clustering b = from_l(parts[j]);
        CHECK(ami(a, b) == doctest::Approx(oracle::ami(parts[i], parts[j])).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("rand scores") {
  SUBCASE("identical") {
    auto [ri, ars] = rand_scores(from_l({0, 0, 1, 1}), from_l({0, 0, 1, 1}));
    CHECK(ri == doctest::Approx(1.0));
    CHECK(ars == doctest::Approx(1.0));
  }
  SUBCASE("crossing: brute-force pair counting over all 6 pairs") {
    auto [ri, ars] = rand_scores(from_l({0, 0, 1, 1}), from_l({0, 1, 0, 1}));
    CHECK(oracle::rand_index({0, 0, 1, 1}, {0, 1, 0, 1}) == doctest::Approx(1.0 / 3.0));
    CHECK(ri == doctest::Approx(1.0 / 3.0));
    CHECK(ars == doctest::Approx(-0.5));
  }
  SUBCASE("n < 2 rejected") {
    CHECK_THROWS_AS(rand_scores(from_l({0}), from_l({0})), std::invalid_argument);
  }
}

TEST_CASE("v-measure") {
  SUBCASE("candidate equals truth") {
    VMeasure printed = v_measure(from_l({0, 0, 1, 1}), from_l({0, 0, 1, 1}), true);
    CHECK(printed.homogeneity == doctest::Approx(1.0));
    CHECK(printed.completeness == doctest::Approx(1.0));
    CHECK(printed.v == doctest::Approx(0.5));
    VMeasure standard = v_measure(from_l({0, 0, 1, 1}), from_l({0, 0, 1, 1}), false);
    CHECK(standard.v == doctest::Approx(1.0));
  }
  SUBCASE("singletons are pure") {
    VMeasure m = v_measure(from_l({0, 0, 1, 1}), from_l({0, 1, 2, 3}));
    CHECK(m.homogeneity == doctest::Approx(1.0));
    CHECK(m.completeness < 1.0);
  }
  SUBCASE("one big cluster") {
    VMeasure m = v_measure(from_l({0, 0, 1, 1}), from_l({0, 0, 0, 0}));
    CHECK(m.completeness == doctest::Approx(1.0));
    CHECK(m.homogeneity == doctest::Approx(0.0));
    CHECK(m.v == doctest::Approx(0.0));
  }
}

TEST_CASE("score properties") {
  Rng rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    VertexId n = static_cast<VertexId>(6 + rng.below(30));
    std::vector<ClusterId> la(n), lb(n);
    for (VertexId v = 0; v < n; ++v) {
      la[v] = static_cast<ClusterId>(rng.below(4));
      lb[v] = static_cast<ClusterId>(rng.below(3));
    }
    Clustering a = from_l(la), b = from_l(lb);

    // symmetry
    CHECK(mutual_information(a, b) == doctest::Approx(mutual_information(b, a)).epsilon(1e-12));
    CHECK(nmi(a, b) == doctest::Approx(nmi(b, a)).epsilon(1e-12));
    CHECK(ami(a, b) == doctest::Approx(ami(b, a)).epsilon(1e-12));
    auto [ri1, ars1] = rand_scores(a, b);
    auto [ri2, ars2] = rand_scores(b, a);
    CHECK(ri1 == doctest::Approx(ri2).epsilon(1e-12));
    CHECK(ars1 == doctest::Approx(ars2).epsilon(1e-12));

    // permutation invariance of cluster ids
    std::vector<ClusterId> relabeled(la.size());
    for (std::size_t i = 0; i < la.size(); ++i) relabeled[i] = 1000 - la[i];
    Clustering ap = from_l(relabeled);
    CHECK(nmi(ap, b) == doctest::Approx(nmi(a, b)).epsilon(1e-12));
    CHECK(ami(ap, b) == doctest::Approx(ami(a, b)).epsilon(1e-12));

    // bounds
    double s_nmi = nmi(a, b);
    CHECK(s_nmi >= 0.0);
    CHECK(s_nmi <= 1.0 + 1e-12);
    CHECK(ri1 >= 0.0);
    CHECK(ri1 <= 1.0);
    CHECK(ars1 <= 1.0 + 1e-12);
    CHECK(ami(a, b) <= 1.0 + 1e-12);

    // NMI = 1 iff identical up to relabeling
    if (s_nmi > 1.0 - 1e-9)
      CHECK(same_partition(a, b));
    else
      CHECK_FALSE(same_partition(a, b));
  }
}

TEST_CASE("score_all bundles the full report") {
  ScoreReport r = score_all(from_l({0, 0, 1, 1}), from_l({0, 0, 1, 2}));
  CHECK(r.nmi == doctest::Approx(0.8));
  CHECK(r.homogeneity == doctest::Approx(1.0));
  CHECK(r.mi == doctest::Approx(std::log(2.0)));
}
