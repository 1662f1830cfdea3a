#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "girthkit/graph.hpp"

namespace testing {

using girthkit::Edge;
using girthkit::Graph;
using girthkit::VertexId;

inline Graph make(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph parse(const std::string& text) {
  std::istringstream in(text);
  return girthkit::load_edge_list(in);
}

inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }

// All-pairs-free reference: distances from `s` by repeated relaxation over
// the edge list, O(n m). Independent of the BFS in the library.
inline std::vector<int> relaxed_distances(const Graph& g, VertexId s) {
  constexpr int kInf = 1 << 29;
  std::vector<int> d(g.vertex_count(), kInf);
  d[s] = 0;
  const auto edges = g.active_edges();
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : edges) {
      if (d[e.u] + 1 < d[e.v]) d[e.v] = d[e.u] + 1, changed = true;
      if (d[e.v] + 1 < d[e.u]) d[e.u] = d[e.v] + 1, changed = true;
    }
  }
  for (int& x : d) {
    if (x == kInf) x = -1;
  }
  return d;
}

}  // namespace testing
