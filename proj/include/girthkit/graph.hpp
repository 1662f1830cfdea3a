#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <ranges>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace girthkit {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple cycle v_1..v_l with the implicit closing edge (v_l, v_1).
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<VertexId> vertices_;
};

class UndoScope;

/// Undirected simple graph over a fixed id range 0..n-1.
///
/// The edge set is frozen at construction and stored in CSR form with each
/// neighbor list in ascending id order. Vertices can be deactivated, which
/// implicitly deactivates their incident edges; neighbor iteration filters
/// inactive endpoints lazily. Deactivations recorded in an UndoScope can be
/// rolled back exactly.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph with n active vertices.
  explicit Graph(std::size_t n);

  /// Builds from an edge list. Duplicate edges (in either orientation) are
  /// collapsed. Throws PreconditionError on self-loops or ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return active_.size(); }
  std::size_t active_vertex_count() const noexcept { return active_vertices_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool is_active(VertexId v) const { return active_[v] != 0; }
  std::size_t degree(VertexId v) const { return degree_[v]; }

  /// Active neighbors of v in ascending id order.
  auto neighbors(VertexId v) const {
    return all_neighbors(v) |
           std::views::filter([this](VertexId w) { return active_[w] != 0; });
  }

  /// Every neighbor in the frozen edge set, active or not.
  std::span<const VertexId> all_neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  /// True iff (u, v) is an active edge.
  bool has_edge(VertexId u, VertexId v) const;

  /// Active edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> active_edges() const;

  std::vector<VertexId> active_vertex_ids() const;

  /// Deactivates every vertex in `vertices` along with its incident edges.
  /// Throws PreconditionError if an id is out of range, inactive, or listed
  /// twice. The call is all-or-nothing.
  void remove_vertices(std::span<const VertexId> vertices, UndoScope* scope = nullptr);

  /// Throws Error describing the first broken representation invariant.
  void audit() const;

  /// Compares the observable state: edge set, activity flags and degrees.
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class UndoScope;

  void deactivate(VertexId v);
  void reactivate(VertexId v);

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::uint8_t> active_;
  std::vector<std::uint32_t> degree_;
  std::size_t edge_count_ = 0;
  std::size_t active_vertices_ = 0;
};

/// Records vertex deactivations so they can be undone. Rolls back on
/// destruction unless `release()` was called.
class UndoScope {
 public:
  explicit UndoScope(Graph& graph) : graph_(&graph) {}
  ~UndoScope() { rollback(); }

  UndoScope(const UndoScope&) = delete;
  UndoScope& operator=(const UndoScope&) = delete;

  /// Reactivates every logged vertex, newest first.
  void rollback();

  /// Keeps the logged mutations; the scope becomes empty.
  void release() noexcept { log_.clear(); }

  std::size_t size() const noexcept { return log_.size(); }

 private:
  friend class Graph;

  Graph* graph_;
  std::vector<VertexId> log_;
};

/// Exact BFS distances from `source`, capped at `depth_cap`. Entries are
/// (vertex, distance) pairs in BFS discovery order, so distances are
/// nondecreasing. Throws PreconditionError if `source` is inactive.
std::vector<std::pair<VertexId, int>> bfs_distances(const Graph& g, VertexId source,
                                                    int depth_cap);

/// |E_v^r|: the number of active edges e with d(v, e) <= r, where
/// d(v, (a, b)) = min(d(v, a), d(v, b)) + 1.
std::size_t ball_edge_count(const Graph& g, VertexId v, int r);

/// Sum of the degrees of s's active neighbors.
std::size_t degree_sum_neighbors(const Graph& g, VertexId s);

/// True iff `c` has length >= 3, distinct active vertices, and every
/// consecutive pair (including the closing pair) is an active edge of g.
bool validate_cycle(const Graph& g, const Cycle& c);

/// Parses the edge-list text format:
///   # comment lines
///   n m
///   u v        (m lines, 0-based ids)
/// Throws ParseError for malformed lines, self-loops and out-of-range ids.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Writes g's active edges in the edge-list format.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace girthkit
