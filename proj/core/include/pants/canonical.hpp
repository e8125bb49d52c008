#pragma once

#include <string>
#include <vector>

namespace pants::detail {

/// Small attributed multigraph used for canonical keys. Vertices carry string
/// attributes, edges are undirected and unlabeled (loops and parallel edges
/// allowed). Keys are equal iff the attributed graphs are isomorphic.
struct CanonGraph {
  std::vector<std::string> vertex_attrs;
  struct Edge {
    int u, v;
  };
  std::vector<Edge> edges;

  int add_vertex(std::string attr);
  void add_edge(int u, int v);
};

/// Deterministic canonical encoding: color refinement to a stable partition,
/// then minimum encoding over all color-respecting labelings.
std::string canonical_encoding(const CanonGraph& g);

}  // namespace pants::detail
