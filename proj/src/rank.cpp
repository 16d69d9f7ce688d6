#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "gclust/bench.hpp"

namespace gclust {

namespace {

double median_of(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of empty set");
  std::sort(v.begin(), v.end());
  std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

int gamma_bin(double gamma) {
  // bins [0,0.2) [0.2,0.4) [0.4,0.6) [0.6,0.8) [0.8,1.0], the last closed
  if (gamma >= 1.0) return 4;
  int b = static_cast<int>(gamma / 0.2);
  return std::clamp(b, 0, 4);
}

std::string gamma_bin_label(int b) {
  static const char* labels[5] = {"gamma(0.0-0.2)", "gamma(0.2-0.4)", "gamma(0.4-0.6)",
                                  "gamma(0.6-0.8)", "gamma(0.8-1.0)"};
  return labels[b];
}

}  // namespace

RankTable rank_matrix(const std::vector<std::string>& algorithms,
                      const std::vector<std::string>& columns,
                      const std::vector<std::vector<std::optional<double>>>& values,
                      bool higher_is_better, SummaryKind summary, int precision) {
  const std::size_t rows = algorithms.size(), cols = columns.size();
  if (values.size() != rows) throw std::invalid_argument("value matrix shape mismatch");
  if (rows == 0 || cols == 0) throw std::invalid_argument("empty rank input");

  const double scale = std::pow(10.0, precision);
  std::vector<std::vector<std::uint32_t>> ranks(rows, std::vector<std::uint32_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::pair<long long, std::size_t>> present;  // (rounded key, row)
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& v = values[r][c];
      if (!v.has_value() || std::isnan(*v)) continue;
      long long key = static_cast<long long>(std::llround(*v * scale));
      present.push_back({higher_is_better ? -key : key, r});
    }
    std::sort(present.begin(), present.end());
    std::uint32_t rank = 0, worst = 0;
    long long prev_key = 0;
    for (std::size_t i = 0; i < present.size(); ++i) {
      if (i == 0 || present[i].first != prev_key) ++rank;  // dense ranking
      prev_key = present[i].first;
      ranks[present[i].second][c] = rank;
      worst = rank;
    }
    for (std::size_t r = 0; r < rows; ++r)
      if (ranks[r][c] == 0) ranks[r][c] = worst + 1;  // missing entries
  }

  std::vector<double> summaries(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> row(ranks[r].begin(), ranks[r].end());
    if (summary == SummaryKind::Median) {
      summaries[r] = median_of(row);
    } else {
      double s = 0;
      for (double x : row) s += x;
      summaries[r] = s / static_cast<double>(row.size());
    }
  }

  std::vector<std::size_t> order(rows);
  for (std::size_t r = 0; r < rows; ++r) order[r] = r;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (summaries[a] != summaries[b]) return summaries[a] < summaries[b];
    return algorithms[a] < algorithms[b];
  });

  RankTable t;
  t.columns = columns;
  for (std::size_t r : order) {
    t.algorithms.push_back(algorithms[r]);
    t.ranks.push_back(ranks[r]);
    t.summary.push_back(summaries[r]);
  }
  return t;
}

RankTable rank_table(const std::vector<BenchRecord>& records, GroupBy group_by,
                     const std::string& metric, SummaryKind summary, int precision) {
  if (records.empty()) throw std::invalid_argument("empty record set");

  auto column_of = [&](const BenchRecord& r) -> std::optional<std::pair<double, std::string>> {
    switch (group_by) {
      case GroupBy::Kind: {
        const std::string k = r.spec.kind();
        double order = k == "RAND" ? 0 : k == "SIMPLE" ? 1 : k == "LFR" ? 2 : 3;
        return {{order, k}};
      }
      case GroupBy::Mu: {
        auto mu = r.spec.mu();
        if (!mu) return std::nullopt;
        char buf[32];
        std::snprintf(buf, sizeof buf, "mu_%g", *mu);
        return {{*mu, buf}};
      }
      case GroupBy::Cz: {
        auto cz = r.spec.cz();
        if (!cz) return std::nullopt;
        char buf[32];
        std::snprintf(buf, sizeof buf, "cz%03u", *cz);
        return {{static_cast<double>(*cz), buf}};
      }
      case GroupBy::Gamma: {
        auto gm = r.spec.gamma();
        if (!gm) return std::nullopt;
        int b = gamma_bin(*gm);
        return {{static_cast<double>(b), gamma_bin_label(b)}};
      }
    }
    return std::nullopt;
  };

  std::map<std::pair<double, std::string>, std::size_t> col_index;
  std::set<std::string> alg_names;
  for (const BenchRecord& r : records) {
    alg_names.insert(r.algorithm);
    auto col = column_of(r);
    if (col) col_index.emplace(*col, 0);
  }
  if (col_index.empty())
    throw std::invalid_argument("no record matches the requested grouping dimension");

  std::vector<std::string> columns;
  for (auto& [key, idx] : col_index) {
    idx = columns.size();
    columns.push_back(key.second);
  }
  std::vector<std::string> algorithms(alg_names.begin(), alg_names.end());
  std::map<std::string, std::size_t> alg_index;
  for (std::size_t i = 0; i < algorithms.size(); ++i) alg_index[algorithms[i]] = i;

  // Gather per-cell metric values (non-timeout, successful records only).
  std::vector<std::vector<std::vector<double>>> cell(
      algorithms.size(), std::vector<std::vector<double>>(columns.size()));
  for (const BenchRecord& r : records) {
    auto col = column_of(r);
    if (!col || r.status != BenchRecord::Status::Ok) continue;
    double value;
    if (metric == "runtime_ms") {
      value = r.runtime_ms;
    } else {
      auto it = r.scores.find(metric);
      if (it == r.scores.end()) continue;
      value = it->second;
    }
    cell[alg_index[r.algorithm]][col_index[*col]].push_back(value);
  }

  std::vector<std::vector<std::optional<double>>> values(
      algorithms.size(), std::vector<std::optional<double>>(columns.size()));
  for (std::size_t a = 0; a < algorithms.size(); ++a)
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (!cell[a][c].empty()) values[a][c] = median_of(cell[a][c]);

  return rank_matrix(algorithms, columns, values, metric != "runtime_ms", summary,
                     precision);
}

}  // namespace gclust
