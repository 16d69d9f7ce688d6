#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gclust/algorithms.hpp"
#include "gclust/generators.hpp"

namespace gclust {

// --- isolated worker -----------------------------------------------------

struct WorkerResult {
  enum class Status { Ok, Timeout, Crashed } status = Status::Crashed;
  double runtime_ms = 0.0;  // algorithm wall time as measured in the worker
  Clustering clustering;    // valid only when status == Ok
};

// Runs alg.run(g, seed, budget_ms) in a forked child pinned (best effort) to
// one core, killing it once the budget elapses. budget_ms <= 0 means no
// limit. A crash or nonzero exit in the child never affects the caller.
WorkerResult run_in_worker(const AlgorithmHandle& alg, const Graph& g, std::uint64_t seed,
                           std::int64_t budget_ms);

// --- capability probing --------------------------------------------------

enum class ProbeKind { Directed, Weighted };
enum class ProbeResult { Supported, NotSupported, Inconclusive };

// Runs the algorithm on a probe graph and on its undirected/unweighted
// projection with identical seeds over `trials` trials; Supported iff any
// trial's partitions differ. Heuristic by construction.
ProbeResult probe_support(const AlgorithmHandle& alg, ProbeKind kind,
                          std::uint64_t seed = 7, int trials = 5);

// --- budgeted benchmark runs ----------------------------------------------

struct BenchRecord {
  std::string algorithm;
  GeneratorSpec spec;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
  bool timed_out = false;
  enum class Status { Ok, Timeout, Crashed, GenFailed } status = Status::Ok;
  std::string error;
  // nmi, ami, ars, ri, mi, homogeneity, completeness, v_measure, modularity;
  // absent on timeout/crash.
  std::map<std::string, double> scores;
};

// One record per (algorithm, spec, seed), deterministically ordered. Each
// algorithm runs in an isolated single-core worker; overlapping outputs are
// crispified (with the record seed) before scoring. Generator failures are
// recorded per-record, never fatal.
std::vector<BenchRecord> run_benchmark(const std::vector<std::string>& algorithms,
                                       const std::vector<GeneratorSpec>& specs,
                                       const std::vector<std::uint64_t>& seeds,
                                       std::int64_t budget_ms);

// --- rank tables -----------------------------------------------------------

enum class GroupBy { Kind, Mu, Cz, Gamma };
enum class SummaryKind { Median, Mean };

struct RankTable {
  std::vector<std::string> columns;
  std::vector<std::string> algorithms;              // sorted by summary, then name
  std::vector<std::vector<std::uint32_t>> ranks;    // [row][column]
  std::vector<double> summary;
};

// Dense competition ranks per column after rounding the aggregated metric
// (median over records in the cell) to `precision` decimals; higher is
// better except for runtime_ms. Algorithms missing from a column get worst
// observed rank + 1. Rows sort ascending by summary.
RankTable rank_table(const std::vector<BenchRecord>& records, GroupBy group_by,
                     const std::string& metric, SummaryKind summary, int precision = 2);

// Raw score matrix interface used by rank_table and its tests: one optional
// value per (algorithm, column).
RankTable rank_matrix(const std::vector<std::string>& algorithms,
                      const std::vector<std::string>& columns,
                      const std::vector<std::vector<std::optional<double>>>& values,
                      bool higher_is_better, SummaryKind summary, int precision);

// --- sweeps ----------------------------------------------------------------

enum class SweepDim { Mu, Cz, Gamma };

struct SweepPoint {
  double x = 0.0;
  std::string label;
  std::vector<double> values;  // raw per-(spec,seed) scores
  double median = 0.0;
  bool skipped = false;
  std::string note;
};

struct SweepCurve {
  std::string algorithm;
  SweepDim dim;
  std::vector<SweepPoint> points;
};

struct SweepConfig {
  std::uint32_t n = 1024;              // graph size
  std::uint32_t ki = 6;                // SIMPLE internal degree (cz/gamma sweeps)
  std::uint32_t ko = 1;                // SIMPLE inter-edges (cz sweep)
  std::uint32_t cz = 16;               // SIMPLE cluster size (gamma sweep)
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::int64_t budget_ms = 0;
};

// Median-NMI curve for one algorithm along mu (LFR(n, n/4, n/2, mu)),
// cz (SIMPLE at n=1024, cz in {4..256}), or gamma (SIMPLE ko grid binned
// into 5 bins over [0,1]). Infeasible generator combinations are skipped
// with a notice.
SweepCurve nmi_sweep(const std::string& algorithm, SweepDim dim, const SweepConfig& cfg);

// --- exports ----------------------------------------------------------------

void export_records_csv(const std::vector<BenchRecord>& records, const std::string& path);
std::vector<BenchRecord> import_records_csv(const std::string& path);
void export_rank_csv(const RankTable& table, const std::string& path);
void export_curve_csv(const SweepCurve& curve, const std::string& path);
// gnuplot-style x/y blocks, one series per curve
void export_plotdata(const std::vector<SweepCurve>& curves, const std::string& path);

}  // namespace gclust
