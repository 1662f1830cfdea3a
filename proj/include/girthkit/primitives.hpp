#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "girthkit/graph.hpp"

namespace girthkit {

struct BallVertex {
  VertexId vertex = 0;
  int distance = 0;

  friend bool operator==(const BallVertex&, const BallVertex&) = default;
};

/// Outcome of growing a ball: a short cycle, or the ball V_v^R listed in
/// nondecreasing distance order (BFS order).
class BallResult {
 public:
  explicit BallResult(Cycle c) : value_(std::move(c)) {}
  explicit BallResult(std::vector<BallVertex> ball) : value_(std::move(ball)) {}

  bool has_cycle() const noexcept { return std::holds_alternative<Cycle>(value_); }
  const Cycle& cycle() const { return std::get<Cycle>(value_); }
  std::span<const BallVertex> ball() const { return std::get<std::vector<BallVertex>>(value_); }

  /// V_v^r for r <= R, in O(|V_v^r|).
  std::span<const BallVertex> prefix(int r) const;

 private:
  std::variant<Cycle, std::vector<BallVertex>> value_;
};

enum class Density { kNo, kYes };

/// Called immediately before an algorithm deletes vertices, with the graph
/// still in its pre-removal state. `bound` is the cycle length the removed
/// vertices are guaranteed not to lie on (cycles of length <= bound).
struct RemovalEvent {
  std::string_view stage;
  int bound = 0;
  std::span<const VertexId> vertices;
};
using RemovalObserver = std::function<void(const Graph&, const RemovalEvent&)>;

/// BFS from v to depth R. If the ball graph B(v, R) contains a cycle, returns
/// a simple cycle of length <= 2R through the non-tree edge that revealed it
/// and the LCA of its endpoints. Otherwise B(v, R) is a tree and the ball is
/// returned.
BallResult ball_or_cycle(const Graph& g, VertexId v, int radius);

/// A cycle of length <= 2t, or nullopt meaning the girth exceeds 2t.
std::optional<Cycle> all_vtx_ball_or_cycle(const Graph& g, int t);

/// kYes iff |E_w^r| >= budget, scanning at most ceil(budget) edges.
Density is_dense(const Graph& g, VertexId w, double budget, int radius);

/// For each vertex w (in ascending order, skipping those already removed)
/// with |E_w^x| >= D^x: grow a ball of radius x - 1 + y; return its cycle if
/// any, else delete V_w^{x-1}. Without a cycle, every survivor u ends with
/// |E_u^x| < D^x and no deleted vertex was on a cycle of length <= 2y.
std::optional<Cycle> sparse_or_cycle(Graph& g, double d, int x, int y,
                                     const RemovalObserver& observer = {});

struct NbrBallResult {
  std::vector<VertexId> removable;  // ascending; empty when a cycle is found
  std::optional<Cycle> cycle;
};

/// Ball search from s and, with s deleted, from each of its neighbors.
/// Either a cycle of length <= 2k, or removable = V_s^{k-alpha+1}, none of
/// whose vertices lies on a cycle of length <= 2 alpha. `g` is left exactly
/// as it was on entry. Requires 2 <= alpha <= k.
NbrBallResult nbr_ball_or_cycle(Graph& g, VertexId s, int k, int alpha);

}  // namespace girthkit
