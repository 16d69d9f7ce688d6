#pragma once

#include <string>

#include "gclust/clustering.hpp"
#include "gclust/graph.hpp"

namespace gclust {

// Edge list files: one edge per line, `u v` or `u v w`, whitespace-separated;
// `#`-prefixed lines are comments. Undirected files list each edge once.
// write_edge_list records isolated vertices in a `#!isolated` comment so a
// round trip preserves the vertex set; other tools simply skip it.
Graph read_edge_list(const std::string& path, const BuildOptions& opts);
void write_edge_list(const Graph& g, const std::string& path);

// Clustering files: one line per vertex, `vertex cluster_id`; overlapping
// clusterings repeat the vertex on multiple lines. Vertex ids are external.
// With a graph, vertices resolve against it and must cover it; standalone,
// the universe is the sorted set of vertex ids seen in the file.
Clustering read_clustering(const std::string& path, const Graph& g);
Clustering read_clustering(const std::string& path);
void write_clustering(const Clustering& c, const std::string& path);

}  // namespace gclust
