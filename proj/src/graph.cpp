#include "girthkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "girthkit/error.hpp"

namespace girthkit {

Graph::Graph(std::size_t n)
    : offsets_(n + 1, 0), active_(n, 1), degree_(n, 0), active_vertices_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw PreconditionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") references a vertex outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    }
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  Graph g(n);
  for (const Edge& e : normalized) {
    ++g.degree_[e.u];
    ++g.degree_[e.v];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degree_[v];
  g.targets_.resize(2 * normalized.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted (u, v) with u < v: pushing v into u's list and u into v's list
  // keeps every list ascending.
  for (const Edge& e : normalized) g.targets_[fill[e.u]++] = e.v;
  for (const Edge& e : normalized) g.targets_[fill[e.v]++] = e.u;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.edge_count_ = normalized.size();
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count() || !is_active(u) || !is_active(v)) return false;
  auto nbrs = all_neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::active_edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    if (!is_active(u)) continue;
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<VertexId> Graph::active_vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(active_vertices_);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_active(v)) out.push_back(v);
  }
  return out;
}

void Graph::remove_vertices(std::span<const VertexId> vertices, UndoScope* scope) {
  for (VertexId v : vertices) {
    if (v >= vertex_count()) {
      throw PreconditionError("remove_vertices: id " + std::to_string(v) + " out of range");
    }
    if (!is_active(v)) {
      throw PreconditionError("remove_vertices: vertex " + std::to_string(v) +
                              " is already inactive");
    }
  }
  if (vertices.size() > 1) {
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("remove_vertices: duplicate id in batch");
    }
  }
  for (VertexId v : vertices) {
    deactivate(v);
    if (scope != nullptr) scope->log_.push_back(v);
  }
}

void Graph::deactivate(VertexId v) {
  for (VertexId w : neighbors(v)) {
    --degree_[w];
    --edge_count_;
  }
  degree_[v] = 0;
  active_[v] = 0;
  --active_vertices_;
}

void Graph::reactivate(VertexId v) {
  std::uint32_t d = 0;
  for (VertexId w : neighbors(v)) {
    ++degree_[w];
    ++edge_count_;
    ++d;
  }
  degree_[v] = d;
  active_[v] = 1;
  ++active_vertices_;
}

void Graph::audit() const {
  const std::size_t n = vertex_count();
  if (offsets_.size() != n + 1 || degree_.size() != n) throw Error("audit: size mismatch");
  std::size_t degree_total = 0;
  std::size_t active_total = 0;
  for (VertexId v = 0; v < n; ++v) {
    auto nbrs = all_neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] >= n) throw Error("audit: neighbor id out of range at " + std::to_string(v));
      if (nbrs[i] == v) throw Error("audit: self-loop at " + std::to_string(v));
      if (i > 0 && nbrs[i - 1] >= nbrs[i]) {
        throw Error("audit: adjacency of " + std::to_string(v) + " not strictly ascending");
      }
      auto back = all_neighbors(nbrs[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) {
        throw Error("audit: asymmetric edge at " + std::to_string(v));
      }
    }
    std::size_t live = 0;
    if (is_active(v)) {
      ++active_total;
      for ([[maybe_unused]] VertexId w : neighbors(v)) ++live;
    }
    if (degree_[v] != live) {
      throw Error("audit: degree of " + std::to_string(v) + " is " +
                  std::to_string(degree_[v]) + ", expected " + std::to_string(live));
    }
    degree_total += live;
  }
  if (degree_total != 2 * edge_count_) throw Error("audit: degree sum != 2 * edge_count");
  if (active_total != active_vertices_) throw Error("audit: active vertex count mismatch");
}

void UndoScope::rollback() {
  while (!log_.empty()) {
    graph_->reactivate(log_.back());
    log_.pop_back();
  }
}

std::vector<std::pair<VertexId, int>> bfs_distances(const Graph& g, VertexId source,
                                                    int depth_cap) {
  if (source >= g.vertex_count() || !g.is_active(source)) {
    throw PreconditionError("bfs_distances: source " + std::to_string(source) +
                            " is not an active vertex");
  }
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<std::pair<VertexId, int>> order;
  dist[source] = 0;
  order.emplace_back(source, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto [u, du] = order[head];
    if (du >= depth_cap) continue;
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = du + 1;
        order.emplace_back(w, du + 1);
      }
    }
  }
  return order;
}

std::size_t ball_edge_count(const Graph& g, VertexId v, int r) {
  if (r <= 0) {
    if (v >= g.vertex_count() || !g.is_active(v)) {
      throw PreconditionError("ball_edge_count: vertex is not active");
    }
    return 0;
  }
  // Every edge with d(v, e) <= r has an endpoint within distance r - 1.
  // Count each such edge once, from its endpoint closest to v (lower id on ties).
  auto reached = bfs_distances(g, v, r);
  std::vector<int> dist(g.vertex_count(), -1);
  for (auto [u, d] : reached) dist[u] = d;
  std::size_t count = 0;
  for (auto [u, du] : reached) {
    if (du > r - 1) continue;
    for (VertexId w : g.neighbors(u)) {
      int dw = dist[w];
      bool w_owns = dw >= 0 && dw <= r - 1 && (dw < du || (dw == du && w < u));
      if (!w_owns) ++count;
    }
  }
  return count;
}

std::size_t degree_sum_neighbors(const Graph& g, VertexId s) {
  if (s >= g.vertex_count() || !g.is_active(s)) {
    throw PreconditionError("degree_sum_neighbors: vertex is not active");
  }
  std::size_t total = 0;
  for (VertexId v : g.neighbors(s)) total += g.degree(v);
  return total;
}

bool validate_cycle(const Graph& g, const Cycle& c) {
  auto vs = c.vertices();
  if (vs.size() < 3) return false;
  std::vector<VertexId> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

}  // namespace girthkit
