#include "gclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gclust {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

ExternalId parse_id(const std::string& tok, const std::string& path, std::size_t lineno) {
  ExternalId id = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw std::runtime_error(path + ":" + std::to_string(lineno) +
                             ": expected non-negative integer id, got '" + tok + "'");
  return id;
}

double parse_weight(const std::string& tok, const std::string& path, std::size_t lineno) {
  try {
    std::size_t pos = 0;
    double w = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return w;
  } catch (const std::exception&) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) +
                             ": non-numeric weight '" + tok + "'");
  }
}

}  // namespace

Graph read_edge_list(const std::string& path, const BuildOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::vector<EdgeInput> edges;
  std::vector<ExternalId> isolated;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("#!isolated", 0) == 0) {
      for (const std::string& t : tokenize(line.substr(10)))
        isolated.push_back(parse_id(t, path, lineno));
      continue;
    }
    if (!line.empty() && line[0] == '#') continue;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() < 2 || toks.size() > 3)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 2-3 tokens, got " + std::to_string(toks.size()));
    EdgeInput e;
    e.u = parse_id(toks[0], path, lineno);
    e.v = parse_id(toks[1], path, lineno);
    if (toks.size() == 3) e.w = parse_weight(toks[2], path, lineno);
    edges.push_back(e);
  }

  if (isolated.empty()) return build_graph(edges, opts);

  // Universe = endpoints in first-appearance order, then the isolated tail.
  std::vector<ExternalId> universe;
  {
    std::map<ExternalId, bool> seen;
    for (const EdgeInput& e : edges) {
      if (!seen.count(e.u)) { seen[e.u] = true; universe.push_back(e.u); }
      if (!seen.count(e.v)) { seen[e.v] = true; universe.push_back(e.v); }
    }
    for (ExternalId v : isolated)
      if (!seen.count(v)) { seen[v] = true; universe.push_back(v); }
  }
  return build_graph(edges, opts, universe);
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.precision(17);

  std::vector<ExternalId> isolated;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) isolated.push_back(g.external_id(v));
  if (!isolated.empty()) {
    out << "#!isolated";
    for (ExternalId v : isolated) out << ' ' << v;
    out << '\n';
  }

  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      VertexId v = nb[i];
      if (!g.directed() && g.external_id(u) > g.external_id(v)) continue;
      out << g.external_id(u) << ' ' << g.external_id(v);
      if (g.weighted()) out << ' ' << g.edge_weight_at(u, i);
      out << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

Clustering read_clustering_impl(const std::string& path, const Graph* g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::vector<std::pair<ExternalId, ExternalId>> rows;  // (vertex, cluster)
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected `vertex cluster_id`");
    rows.emplace_back(parse_id(toks[0], path, lineno), parse_id(toks[1], path, lineno));
  }

  // Resolve the vertex universe.
  std::map<ExternalId, VertexId> vmap;
  std::vector<ExternalId> ext;
  if (g != nullptr) {
    for (VertexId v = 0; v < g->num_vertices(); ++v) vmap[g->external_id(v)] = v;
    ext = g->external_ids();
  } else {
    for (const auto& [v, c] : rows) vmap.emplace(v, 0);
    VertexId next = 0;
    for (auto& [id, slot] : vmap) {
      slot = next++;
      ext.push_back(id);
    }
  }

  std::map<ExternalId, std::vector<VertexId>> by_cluster;
  std::vector<bool> covered(vmap.size(), false);
  for (const auto& [v, c] : rows) {
    auto it = vmap.find(v);
    if (it == vmap.end())
      throw std::runtime_error(path + ": vertex " + std::to_string(v) + " not in graph");
    by_cluster[c].push_back(it->second);
    covered[it->second] = true;
  }
  for (std::size_t v = 0; v < covered.size(); ++v)
    if (!covered[v])
      throw std::runtime_error(path + ": vertex " + std::to_string(ext[v]) +
                               " has no cluster assignment");

  std::vector<std::vector<VertexId>> clusters;
  clusters.reserve(by_cluster.size());
  for (auto& [id, members] : by_cluster) clusters.push_back(std::move(members));
  Clustering c = Clustering::from_clusters(static_cast<VertexId>(vmap.size()),
                                           std::move(clusters));
  c.set_external_ids(std::move(ext));
  return c;
}

}  // namespace

Clustering read_clustering(const std::string& path, const Graph& g) {
  return read_clustering_impl(path, &g);
}

Clustering read_clustering(const std::string& path) {
  return read_clustering_impl(path, nullptr);
}

void write_clustering(const Clustering& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (ClusterId k = 0; k < c.num_clusters(); ++k)
    for (VertexId v : c.cluster(k)) out << c.external_ids()[v] << ' ' << k << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gclust
