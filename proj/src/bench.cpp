#include <poll.h>
#include <sched.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "gclust/bench.hpp"
#include "gclust/fitness.hpp"
#include "gclust/rng.hpp"
#include "gclust/scores.hpp"

namespace gclust {

namespace {

constexpr std::uint32_t kMagic = 0x47434c55;  // "GCLU"

void write_all(int fd, const void* data, std::size_t size) {
  const char* p = static_cast<const char*>(data);
  while (size > 0) {
    ssize_t w = ::write(fd, p, size);
    if (w < 0) {
      if (errno == EINTR) continue;
      _exit(4);
    }
    p += w;
    size -= static_cast<std::size_t>(w);
  }
}

template <class T>
void put(std::vector<char>& buf, const T& v) {
  const char* p = reinterpret_cast<const char*>(&v);
  buf.insert(buf.end(), p, p + sizeof(T));
}

template <class T>
bool get(const std::vector<char>& buf, std::size_t& off, T& v) {
  if (off + sizeof(T) > buf.size()) return false;
  std::memcpy(&v, buf.data() + off, sizeof(T));
  off += sizeof(T);
  return true;
}

void child_main(const AlgorithmHandle& alg, const Graph& g, std::uint64_t seed,
                std::int64_t budget_ms, int fd) {
  // Best-effort pin to one core, per the single-core protocol.
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(0, &set);
  (void)sched_setaffinity(0, sizeof(set), &set);

  Clustering result;
  double runtime_ms = 0.0;
  try {
    auto t0 = std::chrono::steady_clock::now();
    result = alg.run(g, seed, budget_ms);
    auto t1 = std::chrono::steady_clock::now();
    runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  } catch (...) {
    _exit(3);
  }

  std::vector<char> buf;
  put(buf, kMagic);
  put(buf, runtime_ms);
  put(buf, result.num_vertices());
  std::uint8_t overlapped = result.overlapped() ? 1 : 0;
  put(buf, overlapped);
  if (!overlapped) {
    for (VertexId v = 0; v < result.num_vertices(); ++v) put(buf, result.label(v));
  } else {
    put(buf, static_cast<std::uint32_t>(result.num_clusters()));
    for (ClusterId c = 0; c < result.num_clusters(); ++c) {
      put(buf, static_cast<std::uint32_t>(result.cluster(c).size()));
      for (VertexId v : result.cluster(c)) put(buf, v);
    }
  }
  write_all(fd, buf.data(), buf.size());
  _exit(0);
}

bool parse_result(const std::vector<char>& buf, WorkerResult& out) {
  std::size_t off = 0;
  std::uint32_t magic = 0;
  if (!get(buf, off, magic) || magic != kMagic) return false;
  if (!get(buf, off, out.runtime_ms)) return false;
  VertexId n = 0;
  std::uint8_t overlapped = 0;
  if (!get(buf, off, n) || !get(buf, off, overlapped)) return false;
  if (!overlapped) {
    std::vector<ClusterId> labels(n);
    for (VertexId v = 0; v < n; ++v)
      if (!get(buf, off, labels[v])) return false;
    out.clustering = Clustering::from_labels(labels);
  } else {
    std::uint32_t k = 0;
    if (!get(buf, off, k)) return false;
    std::vector<std::vector<VertexId>> clusters(k);
    for (std::uint32_t c = 0; c < k; ++c) {
      std::uint32_t size = 0;
      if (!get(buf, off, size)) return false;
      clusters[c].resize(size);
      for (std::uint32_t i = 0; i < size; ++i)
        if (!get(buf, off, clusters[c][i])) return false;
    }
    out.clustering = Clustering::from_clusters(n, std::move(clusters));
  }
  return off == buf.size();
}

}  // namespace

WorkerResult run_in_worker(const AlgorithmHandle& alg, const Graph& g, std::uint64_t seed,
                           std::int64_t budget_ms) {
  int fds[2];
  if (::pipe(fds) != 0) throw std::runtime_error("pipe() failed");

  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw std::runtime_error("fork() failed");
  }
  if (pid == 0) {
    ::close(fds[0]);
    child_main(alg, g, seed, budget_ms, fds[1]);
    _exit(0);  // not reached
  }
  ::close(fds[1]);

  // Serialization of a large clustering needs a moment beyond the algorithm
  // budget; the child-reported runtime still decides timeouts post hoc.
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(budget_ms > 0 ? budget_ms + 500 : 0);
  std::vector<char> buf;
  char chunk[65536];
  bool timed_out = false;
  for (;;) {
    int wait_ms = -1;
    if (budget_ms > 0) {
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                      deadline - std::chrono::steady_clock::now())
                      .count();
      if (left <= 0) {
        timed_out = true;
        break;
      }
      wait_ms = static_cast<int>(left);
    }
    struct pollfd pfd{fds[0], POLLIN, 0};
    int rc = ::poll(&pfd, 1, wait_ms);
    if (rc == 0) {
      timed_out = true;
      break;
    }
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    ssize_t got = ::read(fds[0], chunk, sizeof chunk);
    if (got < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (got == 0) break;  // EOF
    buf.insert(buf.end(), chunk, chunk + got);
  }
  ::close(fds[0]);

  WorkerResult out;
  if (timed_out) {
    ::kill(pid, SIGKILL);
    int status = 0;
    ::waitpid(pid, &status, 0);
    out.status = WorkerResult::Status::Timeout;
    return out;
  }

  int status = 0;
  ::waitpid(pid, &status, 0);
  bool clean_exit = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  if (!clean_exit || !parse_result(buf, out)) {
    out.status = WorkerResult::Status::Crashed;
    return out;
  }
  if (budget_ms > 0 && out.runtime_ms > static_cast<double>(budget_ms)) {
    out.status = WorkerResult::Status::Timeout;
    return out;
  }
  out.status = WorkerResult::Status::Ok;
  return out;
}

// --- probing ---------------------------------------------------------------

namespace {

// Two cliques bridged by one heavy edge: the weighted structure pulls the
// bridge endpoints together, the unweighted projection keeps the cliques.
std::pair<Graph, Graph> weighted_probe_pair() {
  std::vector<EdgeInput> heavy, plain;
  auto clique = [&](VertexId base, VertexId size) {
    for (VertexId i = 0; i < size; ++i)
      for (VertexId j = i + 1; j < size; ++j) {
        heavy.push_back({base + i, base + j, 1.0});
        plain.push_back({base + i, base + j, std::nullopt});
      }
  };
  clique(0, 6);
  clique(6, 6);
  heavy.push_back({0, 6, 100.0});
  plain.push_back({0, 6, std::nullopt});
  Graph gw = build_graph(heavy, {false, true, DuplicatePolicy::Strict});
  Graph gu = build_graph(plain, {false, false, DuplicatePolicy::Strict});
  return {std::move(gw), std::move(gu)};
}

// Directed probe: one-way links between two directed triangles; the
// undirected projection symmetrizes them.
std::pair<Graph, Graph> directed_probe_pair() {
  std::vector<EdgeInput> arcs = {{0, 1, {}}, {1, 2, {}}, {2, 0, {}},
                                 {3, 4, {}}, {4, 5, {}}, {5, 3, {}},
                                 {0, 3, {}}, {4, 1, {}}};
  Graph gd = build_graph(arcs, {true, false, DuplicatePolicy::Strict});
  Graph gu = to_undirected(gd);
  return {std::move(gd), std::move(gu)};
}

}  // namespace

ProbeResult probe_support(const AlgorithmHandle& alg, ProbeKind kind, std::uint64_t seed,
                          int trials) {
  auto [probe, projection] =
      kind == ProbeKind::Weighted ? weighted_probe_pair() : directed_probe_pair();
  constexpr std::int64_t kProbeBudgetMs = 30000;

  bool any_differ = false;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(t));
    WorkerResult a = run_in_worker(alg, probe, s, kProbeBudgetMs);
    WorkerResult b = run_in_worker(alg, projection, s, kProbeBudgetMs);
    if (a.status != WorkerResult::Status::Ok || b.status != WorkerResult::Status::Ok)
      return ProbeResult::Inconclusive;
    Clustering ca = a.clustering.overlapped() ? crispify(a.clustering, s) : a.clustering;
    Clustering cb = b.clustering.overlapped() ? crispify(b.clustering, s) : b.clustering;
    if (!same_partition(ca, cb)) any_differ = true;
  }
  return any_differ ? ProbeResult::Supported : ProbeResult::NotSupported;
}

// --- benchmark runs ----------------------------------------------------------

std::vector<BenchRecord> run_benchmark(const std::vector<std::string>& algorithms,
                                       const std::vector<GeneratorSpec>& specs,
                                       const std::vector<std::uint64_t>& seeds,
                                       std::int64_t budget_ms) {
  std::vector<const AlgorithmHandle*> handles;
  handles.reserve(algorithms.size());
  for (const std::string& name : algorithms) handles.push_back(&find_algorithm(name));

  struct Key {
    std::size_t alg, spec, seed;
  };
  std::vector<std::pair<Key, BenchRecord>> assembled;

  for (std::size_t si = 0; si < specs.size(); ++si) {
    for (std::size_t ki = 0; ki < seeds.size(); ++ki) {
      GeneratorSpec spec = specs[si];
      spec.seed = seeds[ki];

      BenchmarkInstance inst;
      bool gen_ok = true;
      std::string gen_err;
      try {
        inst = generate(spec);
      } catch (const std::exception& e) {
        gen_ok = false;
        gen_err = e.what();
      }

      for (std::size_t ai = 0; ai < handles.size(); ++ai) {
        BenchRecord rec;
        rec.algorithm = handles[ai]->name;
        rec.spec = spec;
        rec.seed = seeds[ki];
        if (!gen_ok) {
          rec.status = BenchRecord::Status::GenFailed;
          rec.error = gen_err;
          assembled.push_back({{ai, si, ki}, std::move(rec)});
          continue;
        }

        WorkerResult wr = run_in_worker(*handles[ai], inst.graph, seeds[ki], budget_ms);
        switch (wr.status) {
          case WorkerResult::Status::Timeout:
            rec.status = BenchRecord::Status::Timeout;
            rec.timed_out = true;
            break;
          case WorkerResult::Status::Crashed:
            rec.status = BenchRecord::Status::Crashed;
            rec.error = "worker crashed";
            break;
          case WorkerResult::Status::Ok: {
            rec.status = BenchRecord::Status::Ok;
            rec.runtime_ms = wr.runtime_ms;
            Clustering pred = wr.clustering.overlapped()
                                  ? crispify(wr.clustering, seeds[ki])
                                  : wr.clustering;
            ScoreReport s = score_all(inst.truth, pred);
            rec.scores["mi"] = s.mi;
            rec.scores["nmi"] = s.nmi;
            rec.scores["ami"] = s.ami;
            rec.scores["ri"] = s.ri;
            rec.scores["ars"] = s.ars;
            rec.scores["homogeneity"] = s.homogeneity;
            rec.scores["completeness"] = s.completeness;
            rec.scores["v_measure"] = s.v_measure;
            if (inst.graph.num_edges() > 0)
              rec.scores["modularity"] = modularity(inst.graph, pred);
            break;
          }
        }
        assembled.push_back({{ai, si, ki}, std::move(rec)});
      }
    }
  }

  std::sort(assembled.begin(), assembled.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.alg, a.first.spec, a.first.seed) <
           std::tie(b.first.alg, b.first.spec, b.first.seed);
  });
  std::vector<BenchRecord> records;
  records.reserve(assembled.size());
  for (auto& [key, rec] : assembled) records.push_back(std::move(rec));
  return records;
}

}  // namespace gclust
