#include "girthkit/oracle.hpp"

#include <algorithm>
#include <climits>

#include "girthkit/error.hpp"

// Brute-force reference implementations. Nothing here shares code with the
// ball-growing primitives; tests rely on that independence.

namespace girthkit {
namespace {

constexpr int kUnseen = -1;

// Shortest cycle of length <= bound via per-edge BFS. The search depth
// shrinks as better cycles are found.
std::optional<Cycle> shortest_cycle_up_to(const Graph& g, int bound) {
  const std::size_t n = g.vertex_count();
  std::vector<int> dist(n, kUnseen);
  std::vector<VertexId> parent(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);

  int best = bound + 1;
  std::vector<VertexId> best_path;

  for (VertexId u = 0; u < n; ++u) {
    if (!g.is_active(u)) continue;
    for (VertexId target : g.neighbors(u)) {
      if (target < u) continue;
      if (best <= 3) break;
      // A cycle through (u, target) shorter than `best` needs
      // d(u, target) <= best - 2 once the edge itself is removed.
      const int cap = best - 2;
      queue.clear();
      queue.push_back(u);
      dist[u] = 0;
      bool found = false;
      for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        VertexId a = queue[head];
        if (dist[a] >= cap) break;
        for (VertexId b : g.neighbors(a)) {
          if (a == u && b == target) continue;  // the removed edge
          if (dist[b] != kUnseen) continue;
          dist[b] = dist[a] + 1;
          parent[b] = a;
          queue.push_back(b);
          if (b == target) {
            found = true;
            break;
          }
        }
      }
      if (found) {
        best = dist[target] + 1;
        best_path.clear();
        for (VertexId x = target; x != u; x = parent[x]) best_path.push_back(x);
        best_path.push_back(u);
      }
      for (VertexId x : queue) dist[x] = kUnseen;
    }
  }
  if (best > bound) return std::nullopt;
  return Cycle(std::move(best_path));
}

}  // namespace

GirthResult exact_girth(const Graph& g) {
  GirthResult result;
  auto c = shortest_cycle_up_to(g, INT_MAX - 1);
  if (c) {
    result.girth = static_cast<int>(c->length());
    result.witness = std::move(c);
  }
  return result;
}

std::optional<Cycle> shortest_cycle_through(const Graph& g, VertexId v, int bound) {
  if (v >= g.vertex_count() || !g.is_active(v)) {
    throw PreconditionError("shortest_cycle_through: vertex is not active");
  }
  if (bound < 3) return std::nullopt;
  // BFS from v labelling every vertex with the child of v its tree path
  // leaves through. A non-tree edge (a, b) joining different labels closes
  // the simple cycle v ~> a - b ~> v of length d(a) + d(b) + 1, and the
  // shortest cycle through v always contains such an edge.
  const std::size_t n = g.vertex_count();
  std::vector<int> dist(n, kUnseen);
  std::vector<VertexId> parent(n, 0);
  std::vector<VertexId> label(n, 0);
  std::vector<VertexId> order{v};
  dist[v] = 0;
  const int depth_cap = bound - 2;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId a = order[head];
    if (dist[a] >= depth_cap) continue;
    for (VertexId b : g.neighbors(a)) {
      if (dist[b] != kUnseen) continue;
      dist[b] = dist[a] + 1;
      parent[b] = a;
      label[b] = a == v ? b : label[a];
      order.push_back(b);
    }
  }
  int best = bound + 1;
  VertexId best_a = 0;
  VertexId best_b = 0;
  for (VertexId a : order) {
    if (a == v) continue;
    for (VertexId b : g.neighbors(a)) {
      if (b == v || dist[b] == kUnseen || label[a] == label[b]) continue;
      int len = dist[a] + dist[b] + 1;
      if (len < best) {
        best = len;
        best_a = a;
        best_b = b;
      }
    }
  }
  if (best > bound) return std::nullopt;
  std::vector<VertexId> cycle;
  for (VertexId x = best_a; x != v; x = parent[x]) cycle.push_back(x);
  cycle.push_back(v);
  std::reverse(cycle.begin(), cycle.end());
  for (VertexId x = best_b; x != v; x = parent[x]) cycle.push_back(x);
  return Cycle(std::move(cycle));
}

bool on_short_cycle(const Graph& g, VertexId v, int bound) {
  return shortest_cycle_through(g, v, bound).has_value();
}

std::optional<Cycle> has_cycle_at_most(const Graph& g, int bound) {
  if (bound < 3) return std::nullopt;
  return shortest_cycle_up_to(g, bound);
}

}  // namespace girthkit
