#include "gclust/scores.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace gclust {

namespace {

void check_comparable(const Clustering& a, const Clustering& b) {
  if (a.overlapped() || b.overlapped())
    throw std::invalid_argument("score measures require crisp clusterings");
  if (a.num_vertices() != b.num_vertices())
    throw std::invalid_argument("clusterings cover different vertex sets");
  if (a.external_ids() != b.external_ids())
    throw std::invalid_argument("clusterings cover different vertex universes");
}

// Kahan compensated accumulator.
struct Kahan {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

ContingencyTable contingency(const Clustering& a, const Clustering& b) {
  check_comparable(a, b);
  ContingencyTable t;
  t.n = a.num_vertices();
  if (t.n == 0) throw std::invalid_argument("contingency of empty clusterings");
  t.row_sums.resize(a.num_clusters());
  t.col_sums.resize(b.num_clusters());
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  counts.reserve(a.num_clusters() + b.num_clusters());
  for (VertexId v = 0; v < a.num_vertices(); ++v) {
    ClusterId i = a.label(v), j = b.label(v);
    t.row_sums[i]++;
    t.col_sums[j]++;
    counts[(static_cast<std::uint64_t>(i) << 32) | j]++;
  }
  t.cells.reserve(counts.size());
  for (const auto& [key, c] : counts)
    t.cells.push_back({static_cast<std::uint32_t>(key >> 32),
                       static_cast<std::uint32_t>(key & 0xffffffffu), c});
  std::sort(t.cells.begin(), t.cells.end(), [](const auto& x, const auto& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });
  return t;
}

double entropy(const std::vector<std::uint64_t>& sums, std::uint64_t n) {
  double h = 0.0;
  for (std::uint64_t s : sums) {
    if (s == 0) continue;
    double p = static_cast<double>(s) / static_cast<double>(n);
    h -= p * std::log(p);
  }
  return h;
}

double mutual_information(const ContingencyTable& t) {
  double n = static_cast<double>(t.n);
  Kahan acc;
  for (const auto& cell : t.cells) {
    double nij = static_cast<double>(cell.count);
    double ai = static_cast<double>(t.row_sums[cell.row]);
    double bj = static_cast<double>(t.col_sums[cell.col]);
    acc.add(nij / n * std::log(n * nij / (ai * bj)));
  }
  return acc.sum;
}

double mutual_information(const Clustering& a, const Clustering& b) {
  return mutual_information(contingency(a, b));
}

double nmi(const Clustering& a, const Clustering& b) {
  ContingencyTable t = contingency(a, b);
  double ha = entropy(t.row_sums, t.n);
  double hb = entropy(t.col_sums, t.n);
  if (ha == 0.0 && hb == 0.0) return 1.0;
  if (ha == 0.0 || hb == 0.0) return 0.0;
  return 2.0 * mutual_information(t) / (ha + hb);
}

double expected_mi(const ContingencyTable& t) {
  const std::uint64_t n = t.n;
  const double nd = static_cast<double>(n);
  std::vector<double> lg(n + 1);  // lg[i] = log(i!)
  for (std::uint64_t i = 2; i <= n; ++i) lg[i] = lg[i - 1] + std::log(static_cast<double>(i));

  Kahan acc;
  for (std::uint64_t a : t.row_sums) {
    if (a == 0) continue;
    for (std::uint64_t b : t.col_sums) {
      if (b == 0) continue;
      std::uint64_t lo = a + b > n ? a + b - n : 1;
      lo = std::max<std::uint64_t>(lo, 1);
      std::uint64_t hi = std::min(a, b);
      for (std::uint64_t nij = lo; nij <= hi; ++nij) {
        double logp = lg[a] + lg[b] + lg[n - a] + lg[n - b] - lg[n] - lg[nij] -
                      lg[a - nij] - lg[b - nij] - lg[n - a - b + nij];
        double term = static_cast<double>(nij) / nd *
                      std::log(nd * static_cast<double>(nij) /
                               (static_cast<double>(a) * static_cast<double>(b)));
        acc.add(term * std::exp(logp));
      }
    }
  }
  return acc.sum;
}

double ami(const Clustering& a, const Clustering& b) {
  ContingencyTable t = contingency(a, b);
  double ha = entropy(t.row_sums, t.n);
  double hb = entropy(t.col_sums, t.n);
  double mi = mutual_information(t);
  double emi = expected_mi(t);
  double denom = 0.5 * (ha + hb) - emi;
  if (std::abs(denom) < 1e-15) return same_partition(a, b) ? 1.0 : 0.0;
  return (mi - emi) / denom;
}

std::pair<double, double> rand_scores(const Clustering& a, const Clustering& b) {
  ContingencyTable t = contingency(a, b);
  if (t.n < 2) throw std::invalid_argument("rand scores require n >= 2");
  auto choose2 = [](std::uint64_t x) -> long double {
    return static_cast<long double>(x) * (x - 1) / 2.0L;
  };
  long double pairs = choose2(t.n);
  long double sum_cells = 0, sum_a = 0, sum_b = 0;
  for (const auto& cell : t.cells) sum_cells += choose2(cell.count);
  for (std::uint64_t s : t.row_sums) sum_a += choose2(s);
  for (std::uint64_t s : t.col_sums) sum_b += choose2(s);

  long double ri = (pairs + 2 * sum_cells - sum_a - sum_b) / pairs;
  long double expected = sum_a * sum_b / pairs;
  long double denom = 0.5L * (sum_a + sum_b) - expected;
  double ars;
  if (std::abs(static_cast<double>(denom)) < 1e-12)
    ars = same_partition(a, b) ? 1.0 : 0.0;
  else
    ars = static_cast<double>((sum_cells - expected) / denom);
  return {static_cast<double>(ri), ars};
}

VMeasure v_measure(const Clustering& truth, const Clustering& cand, bool paper_literal) {
  ContingencyTable t = contingency(truth, cand);
  double n = static_cast<double>(t.n);
  double h_a = entropy(t.row_sums, t.n);
  double h_c = entropy(t.col_sums, t.n);
  double h_a_given_c = 0.0, h_c_given_a = 0.0;
  for (const auto& cell : t.cells) {
    double nij = static_cast<double>(cell.count);
    h_a_given_c -= nij / n * std::log(nij / static_cast<double>(t.col_sums[cell.col]));
    h_c_given_a -= nij / n * std::log(nij / static_cast<double>(t.row_sums[cell.row]));
  }
  VMeasure m{};
  m.homogeneity = h_a == 0.0 ? 1.0 : 1.0 - h_a_given_c / h_a;
  m.completeness = h_c == 0.0 ? 1.0 : 1.0 - h_c_given_a / h_c;
  double hc = m.homogeneity + m.completeness;
  if (hc == 0.0)
    m.v = 0.0;
  else
    m.v = (paper_literal ? 1.0 : 2.0) * m.homogeneity * m.completeness / hc;
  return m;
}

ScoreReport score_all(const Clustering& truth, const Clustering& pred, bool paper_literal) {
  ScoreReport r{};
  r.mi = mutual_information(truth, pred);
  r.nmi = nmi(truth, pred);
  r.ami = ami(truth, pred);
  auto [ri, ars] = rand_scores(truth, pred);
  r.ri = ri;
  r.ars = ars;
  VMeasure v = v_measure(truth, pred, paper_literal);
  r.homogeneity = v.homogeneity;
  r.completeness = v.completeness;
  r.v_measure = v.v;
  return r;
}

}  // namespace gclust
