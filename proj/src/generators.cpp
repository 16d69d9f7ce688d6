#include "gclust/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

#include "gclust/rng.hpp"

namespace gclust {

namespace {

using Pair = std::pair<VertexId, VertexId>;

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Floyd's uniform M-subset of [0, universe).
std::vector<std::uint64_t> sample_indices(std::uint64_t universe, std::uint64_t count,
                                          Rng& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count * 2);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t j = universe - count; j < universe; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (chosen.insert(t).second) {
      out.push_back(t);
    } else {
      chosen.insert(j);
      out.push_back(j);
    }
  }
  return out;
}

// Decodes a linear index over pairs (i<j) of n elements, lexicographic.
Pair decode_pair(std::uint64_t n, std::uint64_t k) {
  // S(i) = i*(2n-i-1)/2 pairs precede row i; find the largest i with S(i) <= k.
  std::uint64_t lo = 0, hi = n - 1;
  auto row_start = [n](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  while (lo < hi) {
    std::uint64_t mid = (lo + hi + 1) / 2;
    if (row_start(mid) <= k)
      lo = mid;
    else
      hi = mid - 1;
  }
  std::uint64_t i = lo;
  std::uint64_t j = i + 1 + (k - row_start(i));
  return {static_cast<VertexId>(i), static_cast<VertexId>(j)};
}

struct StubPairing {
  std::vector<Pair> edges;
  std::uint64_t same_group_leaks = 0;
};

// Random simple graph realizing `deg` exactly, by stub pairing plus swap
// repair. With `group` set, edges inside one group are also invalid;
// `allow_group_leaks` keeps irreparable same-group pairs (still simple) and
// counts them instead of failing.
StubPairing pair_stubs(const std::vector<std::uint32_t>& deg, Rng& rng,
                       const std::vector<std::uint32_t>* group, bool allow_group_leaks,
                       const std::string& what) {
  std::vector<VertexId> stubs;
  std::uint64_t total = 0;
  for (std::uint32_t d : deg) total += d;
  if (total % 2 != 0) throw std::runtime_error(what + ": odd stub count");
  stubs.reserve(total);
  for (VertexId v = 0; v < deg.size(); ++v)
    for (std::uint32_t i = 0; i < deg[v]; ++i) stubs.push_back(v);

  auto same_group = [&](VertexId a, VertexId b) {
    return group != nullptr && (*group)[a] == (*group)[b];
  };

  constexpr int kRestarts = 30;
  constexpr int kPasses = 300;
  for (int restart = 0; restart < kRestarts; ++restart) {
    rng.shuffle(stubs);
    std::vector<Pair> edges;
    edges.reserve(total / 2);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(total);
    std::vector<std::size_t> bad;  // indices into edges
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      VertexId a = stubs[i], b = stubs[i + 1];
      edges.push_back({a, b});
      bool ok = a != b && !same_group(a, b) && seen.insert(edge_key(a, b)).second;
      if (!ok) bad.push_back(edges.size() - 1);
    }

    for (int pass = 0; pass < kPasses && !bad.empty(); ++pass) {
      std::vector<std::size_t> still_bad;
      for (std::size_t bi : bad) {
        auto [u, v] = edges[bi];
        bool fixed = false;
        for (int attempt = 0; attempt < 40 && !fixed; ++attempt) {
          std::size_t ei = rng.index(edges.size());
          if (ei == bi) continue;
          auto [x, y] = edges[ei];
          if (rng.coin()) std::swap(x, y);
          // proposed: (u,x) and (v,y)
          if (u == x || v == y || same_group(u, x) || same_group(v, y)) continue;
          std::uint64_t k1 = edge_key(u, x), k2 = edge_key(v, y);
          if (k1 == k2 || seen.count(k1) || seen.count(k2)) continue;
          // the partner edge must itself be currently valid (in `seen`)
          auto it = seen.find(edge_key(edges[ei].first, edges[ei].second));
          if (it == seen.end()) continue;
          seen.erase(it);
          seen.insert(k1);
          seen.insert(k2);
          edges[bi] = {u, x};
          edges[ei] = {v, y};
          fixed = true;
        }
        if (!fixed) still_bad.push_back(bi);
      }
      bad.swap(still_bad);
    }

    if (bad.empty()) return {std::move(edges), 0};

    if (allow_group_leaks) {
      // Keep same-group pairs that are otherwise simple; only self-loops and
      // duplicates force a restart.
      bool clean = true;
      std::uint64_t leaks = 0;
      for (std::size_t bi : bad) {
        auto [u, v] = edges[bi];
        if (u == v || !seen.insert(edge_key(u, v)).second) {
          clean = false;
          break;
        }
        ++leaks;
      }
      if (clean) return {std::move(edges), leaks};
    }
  }
  throw std::runtime_error(what + ": could not realize degree sequence within rewiring budget");
}

// Simple graph with exact degrees; takes the complement route when the
// target density exceeds 1/2 so pairing stays in the sparse regime.
std::vector<Pair> random_graph_exact_degrees(const std::vector<std::uint32_t>& deg, Rng& rng,
                                             const std::string& what) {
  std::size_t s = deg.size();
  std::uint64_t total = 0;
  std::uint32_t dmax = 0;
  for (std::uint32_t d : deg) {
    total += d;
    dmax = std::max(dmax, d);
  }
  if (s == 0 || total == 0) return {};
  if (dmax >= s)
    throw std::runtime_error(what + ": degree " + std::to_string(dmax) +
                             " impossible among " + std::to_string(s) + " vertices");
  std::uint64_t possible = static_cast<std::uint64_t>(s) * (s - 1) / 2;
  std::uint64_t target_edges = total / 2;
  if (target_edges > possible)
    throw std::runtime_error(what + ": more edges requested than pairs available");

  if (target_edges * 2 <= possible)
    return pair_stubs(deg, rng, nullptr, false, what).edges;

  std::vector<std::uint32_t> comp(s);
  for (std::size_t v = 0; v < s; ++v) comp[v] = static_cast<std::uint32_t>(s - 1) - deg[v];
  std::vector<Pair> comp_edges = pair_stubs(comp, rng, nullptr, false, what + " (complement)").edges;
  std::unordered_set<std::uint64_t> skip;
  skip.reserve(comp_edges.size() * 2);
  for (auto [u, v] : comp_edges) skip.insert(edge_key(u, v));
  std::vector<Pair> out;
  out.reserve(possible - comp_edges.size());
  for (VertexId u = 0; u + 1 < s; ++u)
    for (VertexId v = u + 1; v < s; ++v)
      if (!skip.count(edge_key(u, v))) out.push_back({u, v});
  return out;
}

Clustering truth_from_assignment(VertexId n, const std::vector<std::uint32_t>& comm,
                                 std::size_t n_comms) {
  std::vector<std::vector<VertexId>> clusters(n_comms);
  for (VertexId v = 0; v < n; ++v) clusters[comm[v]].push_back(v);
  return Clustering::from_clusters(n, std::move(clusters));
}

// --- truncated continuous power law ------------------------------------

double powerlaw_mean(double a, double b, double tau) {
  if (std::abs(tau - 1.0) < 1e-12) return (b - a) / std::log(b / a);
  if (std::abs(tau - 2.0) < 1e-12) return std::log(b / a) / (1.0 / a - 1.0 / b);
  double num = (std::pow(b, 2.0 - tau) - std::pow(a, 2.0 - tau)) / (2.0 - tau);
  double den = (std::pow(b, 1.0 - tau) - std::pow(a, 1.0 - tau)) / (1.0 - tau);
  return num / den;
}

double powerlaw_sample(double a, double b, double tau, double u) {
  if (std::abs(tau - 1.0) < 1e-12) return a * std::pow(b / a, u);
  double p = 1.0 - tau;
  return std::pow(std::pow(a, p) + u * (std::pow(b, p) - std::pow(a, p)), 1.0 / p);
}

// Lower cutoff achieving mean `target` on [a, b]; the mean is increasing in a.
double solve_xmin(double target, double b, double tau) {
  double lo = 1.0, hi = b;
  if (powerlaw_mean(lo, b, tau) >= target) return lo;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (powerlaw_mean(mid, b, tau) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// --- LFR assembly --------------------------------------------------------

struct LfrWiring {
  std::vector<std::uint32_t> comm;           // per-vertex community
  std::size_t n_comms = 0;
  std::vector<std::uint32_t> int_deg;        // realized internal target
  std::vector<std::uint32_t> ext_deg;
  std::vector<Pair> internal_edges;
  std::vector<Pair> external_edges;
};

LfrWiring lfr_wire(const LfrParams& p, Rng& rng) {
  if (p.n < 2) throw std::invalid_argument("LFR requires n >= 2");
  if (p.k <= 0 || p.k > p.max_k) throw std::invalid_argument("LFR requires 0 < k <= max_k");
  if (p.max_k >= p.n) throw std::invalid_argument("LFR requires max_k < n");
  if (p.mu < 0.0 || p.mu > 1.0) throw std::invalid_argument("LFR requires mu in [0,1]");

  std::uint32_t minc = p.minc != 0 ? p.minc
                                   : std::max<std::uint32_t>(
                                         static_cast<std::uint32_t>(std::llround(p.k)),
                                         p.n / 50);
  std::uint32_t maxc = p.maxc != 0 ? p.maxc : 2 * p.max_k;
  maxc = std::min(maxc, p.n);
  if (p.mu > 0.0) maxc = std::min(maxc, p.n - minc);  // mixing needs >= 2 communities
  minc = std::max<std::uint32_t>(minc, 2);
  if (minc > maxc)
    throw std::invalid_argument("LFR community size range is empty (minc > maxc); "
                                "n too small for the requested k/max_k");

  // Degree sequence.
  double xmin = solve_xmin(p.k, p.max_k, p.tau1);
  std::vector<std::uint32_t> deg(p.n);
  for (auto& d : deg) {
    double x = powerlaw_sample(xmin, p.max_k, p.tau1, rng.unit());
    d = static_cast<std::uint32_t>(
        std::clamp<long long>(std::llround(x), 1, p.max_k));
  }
  std::uint64_t dsum = std::accumulate(deg.begin(), deg.end(), std::uint64_t{0});
  if (dsum % 2 != 0) {
    for (;;) {
      std::size_t v = rng.index(p.n);
      if (deg[v] < p.max_k) {
        deg[v]++;
        break;
      }
    }
  }

  auto target_internal = [&](std::uint32_t d) {
    return static_cast<std::uint32_t>(
        std::clamp<long long>(std::llround((1.0 - p.mu) * d), 0, d));
  };
  std::uint32_t max_int = 0;
  for (std::uint32_t d : deg) max_int = std::max(max_int, target_internal(d));

  constexpr int kSizeAttempts = 500;
  std::string failure = "community sizes never satisfied the degree constraints";
  for (int attempt = 0; attempt < kSizeAttempts; ++attempt) {
    // Community sizes: power law within [minc, maxc], trimmed to sum n.
    std::vector<std::uint32_t> sizes;
    std::uint64_t sum = 0;
    while (sum < p.n) {
      double s = powerlaw_sample(minc, maxc, p.tau2, rng.unit());
      std::uint32_t si = static_cast<std::uint32_t>(
          std::clamp<long long>(std::llround(s), minc, maxc));
      sizes.push_back(si);
      sum += si;
    }
    std::uint64_t overshoot = sum - p.n;
    bool trimmed = true;
    std::vector<std::size_t> reducible;
    while (overshoot > 0) {
      reducible.clear();
      for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] > minc) reducible.push_back(i);
      if (reducible.empty()) {
        trimmed = false;
        break;
      }
      std::uint64_t step = std::min<std::uint64_t>(overshoot, reducible.size());
      for (std::uint64_t t = 0; t < step; ++t) {
        std::size_t c = reducible[rng.index(reducible.size())];
        if (sizes[c] > minc) {
          sizes[c]--;
          overshoot--;
        }
      }
    }
    if (!trimmed) continue;
    if (p.mu > 0.0 && sizes.size() < 2) continue;
    std::uint32_t biggest = *std::max_element(sizes.begin(), sizes.end());
    if (biggest < max_int + 1) {
      failure = "largest community (" + std::to_string(biggest) +
                ") cannot host internal degree " + std::to_string(max_int);
      continue;
    }

    // Assignment: high internal degree first, random feasible community.
    std::vector<VertexId> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return target_internal(deg[a]) > target_internal(deg[b]);
    });
    std::vector<std::uint32_t> quota = sizes;
    std::vector<std::uint32_t> comm(p.n, 0);
    bool assigned = true;
    std::vector<std::uint32_t> candidates;
    for (VertexId v : order) {
      candidates.clear();
      std::uint32_t need = target_internal(deg[v]);
      for (std::uint32_t c = 0; c < sizes.size(); ++c)
        if (quota[c] > 0 && sizes[c] - 1 >= need) candidates.push_back(c);
      if (candidates.empty()) {
        assigned = false;
        failure = "no community with room for internal degree " + std::to_string(need);
        break;
      }
      std::uint32_t c = candidates[rng.index(candidates.size())];
      comm[v] = c;
      quota[c]--;
    }
    if (!assigned) continue;

    std::vector<std::uint32_t> int_deg(p.n);
    for (VertexId v = 0; v < p.n; ++v) int_deg[v] = target_internal(deg[v]);

    // Per-community stub parity: shift one unit between internal and external.
    std::vector<std::vector<VertexId>> members(sizes.size());
    for (VertexId v = 0; v < p.n; ++v) members[comm[v]].push_back(v);
    bool parity_ok = true;
    for (std::uint32_t c = 0; c < sizes.size(); ++c) {
      std::uint64_t s = 0;
      for (VertexId v : members[c]) s += int_deg[v];
      if (s % 2 == 0) continue;
      bool fixed = false;
      std::vector<VertexId> shuffled = members[c];
      rng.shuffle(shuffled);
      for (VertexId v : shuffled) {  // prefer adding an internal stub
        if (int_deg[v] < deg[v] && int_deg[v] + 1 <= sizes[c] - 1) {
          int_deg[v]++;
          fixed = true;
          break;
        }
      }
      if (!fixed) {
        for (VertexId v : shuffled) {
          if (int_deg[v] > 0) {
            int_deg[v]--;
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) {
        parity_ok = false;
        break;
      }
    }
    if (!parity_ok) {
      failure = "could not balance internal stub parity";
      continue;
    }

    std::vector<std::uint32_t> ext_deg(p.n);
    for (VertexId v = 0; v < p.n; ++v) ext_deg[v] = deg[v] - int_deg[v];

    // External stubs must be matchable across communities: no community may
    // hold more than (roughly) half of them.
    std::uint64_t ext_total = 0;
    std::vector<std::uint64_t> ext_by_comm(sizes.size(), 0);
    for (VertexId v = 0; v < p.n; ++v) {
      ext_total += ext_deg[v];
      ext_by_comm[comm[v]] += ext_deg[v];
    }
    if (ext_total > 0) {
      std::uint64_t biggest_share = *std::max_element(ext_by_comm.begin(), ext_by_comm.end());
      if (static_cast<double>(biggest_share) > 0.52 * static_cast<double>(ext_total)) {
        failure = "external stubs concentrated in one community";
        continue;
      }
    }

    // Wire it.
    LfrWiring w;
    w.comm = comm;
    w.n_comms = sizes.size();
    w.int_deg = int_deg;
    w.ext_deg = ext_deg;
    try {
      for (std::uint32_t c = 0; c < sizes.size(); ++c) {
        std::vector<std::uint32_t> local(members[c].size());
        for (std::size_t i = 0; i < members[c].size(); ++i) local[i] = int_deg[members[c][i]];
        std::vector<Pair> edges =
            random_graph_exact_degrees(local, rng, "LFR community " + std::to_string(c));
        for (auto [a, b] : edges)
          w.internal_edges.push_back({members[c][a], members[c][b]});
      }
      if (ext_total > 0) {
        StubPairing ext = pair_stubs(ext_deg, rng, &comm, true, "LFR external wiring");
        w.external_edges = std::move(ext.edges);
      }
    } catch (const std::runtime_error& e) {
      failure = e.what();
      continue;
    }
    return w;
  }
  throw std::runtime_error("LFR generation infeasible: " + failure);
}

}  // namespace

BenchmarkInstance gen_random(std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  std::uint64_t possible = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > possible)
    throw std::invalid_argument("RAND: m exceeds n(n-1)/2 = " + std::to_string(possible));
  Rng rng(seed);
  std::vector<EdgeInput> edges;
  edges.reserve(m);
  if (m > 0) {
    for (std::uint64_t idx : sample_indices(possible, m, rng)) {
      auto [u, v] = decode_pair(n, idx);
      edges.push_back({u, v, std::nullopt});
    }
  }
  BuildOptions opts{false, false, DuplicatePolicy::Strict};
  Graph g = build_graph_dense(static_cast<VertexId>(n), edges, opts);

  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), 0);
  Clustering truth = Clustering::from_clusters(static_cast<VertexId>(n), {all});
  GeneratorSpec spec{RandParams{n, m}, seed};
  return {std::move(g), std::move(truth), spec};
}

BenchmarkInstance gen_simple(std::uint32_t nc, std::uint32_t cz, std::uint32_t ki,
                             std::uint32_t ko, std::uint64_t seed) {
  if (nc == 0 || cz == 0) throw std::invalid_argument("SIMPLE: nc and cz must be positive");
  if (ki >= cz) throw std::invalid_argument("SIMPLE: ki must be < cz");
  if (static_cast<std::uint64_t>(ki) * cz % 2 != 0)
    throw std::invalid_argument("SIMPLE: ki*cz must be even");
  if (ko > static_cast<std::uint64_t>(cz) * cz)
    throw std::invalid_argument("SIMPLE: ko exceeds cz^2");

  Rng rng(seed);
  VertexId n = nc * cz;
  std::vector<EdgeInput> edges;

  // Intra: random ki-regular subgraph per cluster.
  std::vector<std::uint32_t> regular(cz, ki);
  for (std::uint32_t c = 0; c < nc; ++c) {
    VertexId base = c * cz;
    for (auto [a, b] : random_graph_exact_degrees(regular, rng,
                                                  "SIMPLE cluster " + std::to_string(c)))
      edges.push_back({base + a, base + b, std::nullopt});
  }

  // Inter: exactly ko distinct pairs per unordered cluster pair.
  for (std::uint32_t a = 0; a < nc; ++a) {
    for (std::uint32_t b = a + 1; b < nc; ++b) {
      if (ko == 0) continue;
      for (std::uint64_t idx :
           sample_indices(static_cast<std::uint64_t>(cz) * cz, ko, rng)) {
        VertexId u = a * cz + static_cast<VertexId>(idx / cz);
        VertexId v = b * cz + static_cast<VertexId>(idx % cz);
        edges.push_back({u, v, std::nullopt});
      }
    }
  }

  BuildOptions opts{false, false, DuplicatePolicy::Strict};
  Graph g = build_graph_dense(n, edges, opts);

  std::vector<std::vector<VertexId>> clusters(nc);
  for (std::uint32_t c = 0; c < nc; ++c) {
    clusters[c].resize(cz);
    std::iota(clusters[c].begin(), clusters[c].end(), c * cz);
  }
  Clustering truth = Clustering::from_clusters(n, std::move(clusters));
  GeneratorSpec spec{SimpleParams{nc, cz, ki, ko}, seed};
  return {std::move(g), std::move(truth), spec};
}

BenchmarkInstance gen_lfr(const LfrParams& p, std::uint64_t seed) {
  Rng rng(seed);
  LfrWiring w = lfr_wire(p, rng);
  std::vector<EdgeInput> edges;
  edges.reserve(w.internal_edges.size() + w.external_edges.size());
  for (auto [u, v] : w.internal_edges) edges.push_back({u, v, std::nullopt});
  for (auto [u, v] : w.external_edges) edges.push_back({u, v, std::nullopt});
  BuildOptions opts{false, false, DuplicatePolicy::Strict};
  Graph g = build_graph_dense(p.n, edges, opts);
  Clustering truth = truth_from_assignment(p.n, w.comm, w.n_comms);
  GeneratorSpec spec{p, seed};
  return {std::move(g), std::move(truth), spec};
}

BenchmarkInstance gen_wlfr(const WlfrParams& p, std::uint64_t seed) {
  if (p.mu_t < 0.0 || p.mu_t > 1.0) throw std::invalid_argument("WLFR: mu_t in [0,1]");
  Rng rng(seed);
  LfrWiring w = lfr_wire(p.lfr, rng);

  VertexId n = p.lfr.n;
  std::vector<std::uint32_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = w.int_deg[v] + w.ext_deg[v];

  // Re-derive realized internal/external edge counts (repair may have leaked
  // a few external pairs inside a community).
  std::vector<std::uint32_t> int_cnt(n, 0), ext_cnt(n, 0);
  std::vector<bool> is_external;
  auto classify = [&](const std::vector<Pair>& list) {
    for (auto [u, v] : list) {
      bool ext = w.comm[u] != w.comm[v];
      is_external.push_back(ext);
      if (ext) {
        ext_cnt[u]++;
        ext_cnt[v]++;
      } else {
        int_cnt[u]++;
        int_cnt[v]++;
      }
    }
  };
  classify(w.internal_edges);
  classify(w.external_edges);

  // Strength deg^beta, split (1-mu_t)/mu_t over internal/external edges; a
  // vertex with no edges on one side pushes all strength to the other.
  std::vector<double> int_share(n, 0.0), ext_share(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    double s = std::pow(static_cast<double>(deg[v]), p.beta);
    double si = (1.0 - p.mu_t) * s, se = p.mu_t * s;
    if (ext_cnt[v] == 0) {
      si = s;
      se = 0.0;
    } else if (int_cnt[v] == 0) {
      si = 0.0;
      se = s;
    }
    if (int_cnt[v] > 0) int_share[v] = si / int_cnt[v];
    if (ext_cnt[v] > 0) ext_share[v] = se / ext_cnt[v];
  }

  std::vector<EdgeInput> edges;
  edges.reserve(is_external.size());
  std::size_t idx = 0;
  auto emit = [&](const std::vector<Pair>& list) {
    for (auto [u, v] : list) {
      double wgt = is_external[idx] ? 0.5 * (ext_share[u] + ext_share[v])
                                    : 0.5 * (int_share[u] + int_share[v]);
      edges.push_back({u, v, std::max(wgt, 1e-12)});
      ++idx;
    }
  };
  emit(w.internal_edges);
  emit(w.external_edges);

  BuildOptions opts{false, true, DuplicatePolicy::Strict};
  Graph g = build_graph_dense(n, edges, opts);
  Clustering truth = truth_from_assignment(n, w.comm, w.n_comms);
  GeneratorSpec spec{p, seed};
  return {std::move(g), std::move(truth), spec};
}

BenchmarkInstance generate(const GeneratorSpec& spec) {
  if (const auto* r = std::get_if<RandParams>(&spec.params))
    return gen_random(r->n, r->m, spec.seed);
  if (const auto* s = std::get_if<SimpleParams>(&spec.params))
    return gen_simple(s->nc, s->cz, s->ki, s->ko, spec.seed);
  if (const auto* l = std::get_if<LfrParams>(&spec.params)) return gen_lfr(*l, spec.seed);
  return gen_wlfr(std::get<WlfrParams>(spec.params), spec.seed);
}

// --- spec metadata -------------------------------------------------------

std::string GeneratorSpec::kind() const {
  switch (params.index()) {
    case 0: return "RAND";
    case 1: return "SIMPLE";
    case 2: return "LFR";
    default: return "WLFR";
  }
}

std::string GeneratorSpec::name() const {
  char buf[160];
  if (const auto* r = std::get_if<RandParams>(&params)) {
    std::snprintf(buf, sizeof buf, "RAND(%llu,%llu)", (unsigned long long)r->n,
                  (unsigned long long)r->m);
  } else if (const auto* s = std::get_if<SimpleParams>(&params)) {
    std::snprintf(buf, sizeof buf, "SIMPLE(%u,%u,%u,%u)", s->nc, s->cz, s->ki, s->ko);
  } else if (const auto* l = std::get_if<LfrParams>(&params)) {
    std::snprintf(buf, sizeof buf, "LFR(%u,%g,%u,%g)", l->n, l->k, l->max_k, l->mu);
  } else {
    const auto& w = std::get<WlfrParams>(params);
    std::snprintf(buf, sizeof buf, "WLFR(%u,%g,%u,%g,%g)", w.lfr.n, w.lfr.k, w.lfr.max_k,
                  w.lfr.mu, w.mu_t);
  }
  return buf;
}

std::optional<double> GeneratorSpec::mu() const {
  if (const auto* l = std::get_if<LfrParams>(&params)) return l->mu;
  if (const auto* w = std::get_if<WlfrParams>(&params)) return w->lfr.mu;
  return std::nullopt;
}

std::optional<std::uint32_t> GeneratorSpec::cz() const {
  if (const auto* s = std::get_if<SimpleParams>(&params)) return s->cz;
  return std::nullopt;
}

std::optional<double> GeneratorSpec::gamma() const {
  if (const auto* s = std::get_if<SimpleParams>(&params)) return s->gamma();
  return std::nullopt;
}

std::string GeneratorSpec::to_json(std::uint64_t realized_n, std::uint64_t realized_m) const {
  nlohmann::json j;
  j["kind"] = kind();
  j["seed"] = seed;
  j["realized"] = {{"n", realized_n}, {"m", realized_m}};
  nlohmann::json& pj = j["parameters"];
  if (const auto* r = std::get_if<RandParams>(&params)) {
    pj = {{"n", r->n}, {"m", r->m}};
  } else if (const auto* s = std::get_if<SimpleParams>(&params)) {
    pj = {{"nc", s->nc}, {"cz", s->cz}, {"ki", s->ki}, {"ko", s->ko}, {"gamma", s->gamma()}};
  } else if (const auto* l = std::get_if<LfrParams>(&params)) {
    pj = {{"n", l->n},     {"k", l->k},       {"max_k", l->max_k}, {"mu", l->mu},
          {"tau1", l->tau1}, {"tau2", l->tau2}, {"minc", l->minc},   {"maxc", l->maxc}};
  } else {
    const auto& w = std::get<WlfrParams>(params);
    pj = {{"n", w.lfr.n},       {"k", w.lfr.k},       {"max_k", w.lfr.max_k},
          {"mu", w.lfr.mu},     {"tau1", w.lfr.tau1}, {"tau2", w.lfr.tau2},
          {"minc", w.lfr.minc}, {"maxc", w.lfr.maxc}, {"mu_t", w.mu_t},
          {"beta", w.beta}};
  }
  return j.dump(2);
}

GeneratorSpec GeneratorSpec::from_name(const std::string& name) {
  auto open = name.find('(');
  auto close = name.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("malformed generator name: " + name);
  std::string kind = name.substr(0, open);
  std::vector<double> args;
  std::string body = name.substr(open + 1, close - open - 1);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    args.push_back(std::stod(body.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  GeneratorSpec spec;
  auto u32 = [&](std::size_t i) { return static_cast<std::uint32_t>(args.at(i)); };
  if (kind == "RAND") {
    spec.params = RandParams{static_cast<std::uint64_t>(args.at(0)),
                             static_cast<std::uint64_t>(args.at(1))};
  } else if (kind == "SIMPLE") {
    spec.params = SimpleParams{u32(0), u32(1), u32(2), u32(3)};
  } else if (kind == "LFR") {
    LfrParams l;
    l.n = u32(0);
    l.k = args.at(1);
    l.max_k = u32(2);
    l.mu = args.at(3);
    spec.params = l;
  } else if (kind == "WLFR") {
    LfrParams l;
    l.n = u32(0);
    l.k = args.at(1);
    l.max_k = u32(2);
    l.mu = args.at(3);
    spec.params = WlfrParams{l, args.at(4), 1.5};
  } else {
    throw std::invalid_argument("unknown generator kind: " + kind);
  }
  return spec;
}

GeneratorSpec GeneratorSpec::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GeneratorSpec spec;
  spec.seed = j.value("seed", 0ULL);
  const std::string kind = j.at("kind").get<std::string>();
  const nlohmann::json& pj = j.at("parameters");
  if (kind == "RAND") {
    spec.params = RandParams{pj.at("n").get<std::uint64_t>(), pj.at("m").get<std::uint64_t>()};
  } else if (kind == "SIMPLE") {
    spec.params = SimpleParams{pj.at("nc").get<std::uint32_t>(), pj.at("cz").get<std::uint32_t>(),
                               pj.at("ki").get<std::uint32_t>(), pj.at("ko").get<std::uint32_t>()};
  } else if (kind == "LFR" || kind == "WLFR") {
    LfrParams l;
    l.n = pj.at("n").get<std::uint32_t>();
    l.k = pj.at("k").get<double>();
    l.max_k = pj.at("max_k").get<std::uint32_t>();
    l.mu = pj.at("mu").get<double>();
    l.tau1 = pj.value("tau1", 2.0);
    l.tau2 = pj.value("tau2", 1.0);
    l.minc = pj.value("minc", 0u);
    l.maxc = pj.value("maxc", 0u);
    if (kind == "LFR") {
      spec.params = l;
    } else {
      spec.params = WlfrParams{l, pj.at("mu_t").get<double>(), pj.value("beta", 1.5)};
    }
  } else {
    throw std::invalid_argument("unknown generator kind: " + kind);
  }
  return spec;
}

}  // namespace gclust
