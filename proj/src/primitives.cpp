#include "girthkit/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "girthkit/detail/scratch.hpp"
#include "girthkit/error.hpp"

namespace girthkit {
namespace {

using detail::SearchScratch;

void require_active(const Graph& g, VertexId v, const char* who) {
  if (v >= g.vertex_count() || !g.is_active(v)) {
    throw PreconditionError(std::string(who) + ": vertex " + std::to_string(v) +
                            " is not active");
  }
}

// Closes the cycle formed by tree paths from u and w up to their lowest
// common ancestor plus the edge (u, w).
Cycle close_cycle(const SearchScratch& s, VertexId u, VertexId w) {
  std::vector<VertexId> left{u};
  std::vector<VertexId> right{w};
  VertexId a = u;
  VertexId b = w;
  while (s.dist(a) > s.dist(b)) left.push_back(a = s.parent(a));
  while (s.dist(b) > s.dist(a)) right.push_back(b = s.parent(b));
  while (a != b) {
    left.push_back(a = s.parent(a));
    right.push_back(b = s.parent(b));
  }
  std::vector<VertexId> vertices(left.rbegin(), left.rend());
  vertices.insert(vertices.end(), right.begin(), right.end() - 1);
  return Cycle(std::move(vertices));
}

}  // namespace

std::span<const BallVertex> BallResult::prefix(int r) const {
  auto all = ball();
  auto it = std::upper_bound(all.begin(), all.end(), r,
                             [](int bound, const BallVertex& b) { return bound < b.distance; });
  return all.first(static_cast<std::size_t>(it - all.begin()));
}

BallResult ball_or_cycle(const Graph& g, VertexId v, int radius) {
  require_active(g, v, "ball_or_cycle");
  SearchScratch& s = SearchScratch::local();
  s.begin(g.vertex_count());
  s.visit(v, 0, v);
  std::vector<BallVertex> order{{v, 0}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto [u, du] = order[head];
    // BFS order: every remaining vertex is at distance >= du.
    if (du + 1 > radius) break;
    const VertexId up = s.parent(u);
    for (VertexId w : g.neighbors(u)) {
      if (s.seen(w)) {
        if (w == up && u != v) continue;
        return BallResult(close_cycle(s, u, w));
      }
      s.visit(w, du + 1, u);
      order.push_back({w, du + 1});
    }
  }
  return BallResult(std::move(order));
}

std::optional<Cycle> all_vtx_ball_or_cycle(const Graph& g, int t) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_active(v)) continue;
    BallResult r = ball_or_cycle(g, v, t);
    if (r.has_cycle()) return r.cycle();
  }
  return std::nullopt;
}

Density is_dense(const Graph& g, VertexId w, double budget, int radius) {
  require_active(g, w, "is_dense");
  SearchScratch& s = SearchScratch::local();
  s.begin(g.vertex_count());
  s.visit(w, 0, w);
  std::vector<VertexId> queue{w};
  double scanned = 0.0;
  // An edge is counted from whichever endpoint is dequeued first; a
  // dequeued ("done") neighbor means the edge was already counted. This
  // stands in for deleting the reverse edge and leaves g untouched.
  for (std::size_t head = 0; head < queue.size() && scanned < budget; ++head) {
    VertexId u = queue[head];
    if (s.dist(u) >= radius) break;
    s.mark_done(u);
    for (VertexId x : g.neighbors(u)) {
      if (scanned >= budget) break;
      if (s.done(x)) continue;
      scanned += 1.0;
      if (!s.seen(x)) {
        s.visit(x, s.dist(u) + 1, u);
        queue.push_back(x);
      }
    }
  }
  return scanned >= budget ? Density::kYes : Density::kNo;
}

std::optional<Cycle> sparse_or_cycle(Graph& g, double d, int x, int y,
                                     const RemovalObserver& observer) {
  if (!(d >= 1.0) || x <= 0 || y <= 0) {
    throw PreconditionError("sparse_or_cycle: requires D >= 1 and x, y > 0");
  }
  const double threshold = std::pow(d, x);
  std::vector<VertexId> doomed;
  for (VertexId w : g.active_vertex_ids()) {
    if (!g.is_active(w)) continue;
    if (is_dense(g, w, threshold, x) == Density::kNo) continue;
    BallResult r = ball_or_cycle(g, w, x - 1 + y);
    if (r.has_cycle()) return r.cycle();
    doomed.clear();
    for (const BallVertex& b : r.prefix(x - 1)) doomed.push_back(b.vertex);
    if (observer) observer(g, {"sparse_or_cycle", 2 * y, doomed});
    g.remove_vertices(doomed);
  }
  return std::nullopt;
}

NbrBallResult nbr_ball_or_cycle(Graph& g, VertexId s, int k, int alpha) {
  require_active(g, s, "nbr_ball_or_cycle");
  if (alpha < 2 || alpha > k) {
    throw PreconditionError("nbr_ball_or_cycle: requires 2 <= alpha <= k");
  }
  NbrBallResult out;
  {
    BallResult r = ball_or_cycle(g, s, k);
    if (r.has_cycle()) {
      out.cycle = r.cycle();
      return out;
    }
  }
  std::vector<VertexId> removable{s};
  std::vector<VertexId> nbrs;
  for (VertexId v : g.neighbors(s)) nbrs.push_back(v);

  UndoScope scope(g);
  const VertexId center[] = {s};
  g.remove_vertices(center, &scope);
  for (VertexId v : nbrs) {
    BallResult r = ball_or_cycle(g, v, k);
    if (r.has_cycle()) {
      out.cycle = r.cycle();
      return out;  // scope restores s
    }
    for (const BallVertex& b : r.prefix(k - alpha)) removable.push_back(b.vertex);
  }
  scope.rollback();

  std::sort(removable.begin(), removable.end());
  removable.erase(std::unique(removable.begin(), removable.end()), removable.end());
  out.removable = std::move(removable);
  return out;
}

}  // namespace girthkit
