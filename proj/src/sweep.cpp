#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "gclust/bench.hpp"
#include "gclust/scores.hpp"

namespace gclust {

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

// Runs the algorithm over all seeds on one generator configuration and
// appends truth-NMI values; returns false (with a note) on generator
// infeasibility.
bool collect_point(const AlgorithmHandle& alg, GeneratorSpec spec,
                   const std::vector<std::uint64_t>& seeds, std::int64_t budget_ms,
                   std::vector<double>& out, std::string& note) {
  for (std::uint64_t seed : seeds) {
    spec.seed = seed;
    BenchmarkInstance inst;
    try {
      inst = generate(spec);
    } catch (const std::exception& e) {
      note = e.what();
      return false;
    }
    WorkerResult wr = run_in_worker(alg, inst.graph, seed, budget_ms);
    if (wr.status != WorkerResult::Status::Ok) {
      note = wr.status == WorkerResult::Status::Timeout ? "timeout" : "crash";
      continue;  // other seeds may still contribute
    }
    Clustering pred =
        wr.clustering.overlapped() ? crispify(wr.clustering, seed) : wr.clustering;
    out.push_back(nmi(inst.truth, pred));
  }
  return true;
}

}  // namespace

SweepCurve nmi_sweep(const std::string& algorithm, SweepDim dim, const SweepConfig& cfg) {
  const AlgorithmHandle& alg = find_algorithm(algorithm);
  SweepCurve curve;
  curve.algorithm = algorithm;
  curve.dim = dim;

  auto finish_point = [](SweepPoint& p) {
    if (!p.values.empty())
      p.median = median_of(p.values);
    else if (!p.skipped)
      p.skipped = true;
  };

  switch (dim) {
    case SweepDim::Mu: {
      for (int i = 1; i <= 9; ++i) {
        double mu = i / 10.0;
        SweepPoint p;
        p.x = mu;
        char buf[32];
        std::snprintf(buf, sizeof buf, "mu_%g", mu);
        p.label = buf;
        LfrParams l;
        l.n = cfg.n;
        l.k = cfg.n / 4.0;
        l.max_k = cfg.n / 2;
        l.mu = mu;
        if (!collect_point(alg, GeneratorSpec{l, 0}, cfg.seeds, cfg.budget_ms, p.values,
                           p.note))
          p.skipped = true;
        finish_point(p);
        curve.points.push_back(std::move(p));
      }
      break;
    }
    case SweepDim::Cz: {
      for (std::uint32_t cz : {4u, 8u, 16u, 32u, 64u, 128u, 256u}) {
        SweepPoint p;
        p.x = cz;
        char buf[32];
        std::snprintf(buf, sizeof buf, "cz%03u", cz);
        p.label = buf;
        std::uint32_t nc = 1024 / cz;
        bool feasible = cfg.ki < cz && (static_cast<std::uint64_t>(cfg.ki) * cz) % 2 == 0 &&
                        cfg.ko <= static_cast<std::uint64_t>(cz) * cz;
        if (!feasible) {
          p.skipped = true;
          p.note = "infeasible SIMPLE parameters";
        } else if (!collect_point(alg, GeneratorSpec{SimpleParams{nc, cz, cfg.ki, cfg.ko}, 0},
                                  cfg.seeds, cfg.budget_ms, p.values, p.note)) {
          p.skipped = true;
        }
        finish_point(p);
        curve.points.push_back(std::move(p));
      }
      break;
    }
    case SweepDim::Gamma: {
      // ko grid 0..ki pooled into the five bins over gamma = ko/ki.
      std::uint32_t cz = cfg.cz;
      std::uint32_t nc = std::max(2u, cfg.n / cz);
      std::vector<SweepPoint> bins(5);
      for (int b = 0; b < 5; ++b) {
        static const char* labels[5] = {"gamma(0.0-0.2)", "gamma(0.2-0.4)",
                                        "gamma(0.4-0.6)", "gamma(0.6-0.8)",
                                        "gamma(0.8-1.0)"};
        bins[b].label = labels[b];
        bins[b].x = 0.1 + 0.2 * b;
      }
      for (std::uint32_t ko = 0; ko <= cfg.ki; ++ko) {
        double gamma = static_cast<double>(ko) / cfg.ki;
        int b = gamma >= 1.0 ? 4 : std::min(4, static_cast<int>(gamma / 0.2));
        std::string note;
        if (!collect_point(alg, GeneratorSpec{SimpleParams{nc, cz, cfg.ki, ko}, 0},
                           cfg.seeds, cfg.budget_ms, bins[b].values, note)) {
          if (!note.empty()) bins[b].note = note;
        }
      }
      for (auto& p : bins) {
        finish_point(p);
        curve.points.push_back(std::move(p));
      }
      break;
    }
  }
  return curve;
}

}  // namespace gclust
