#pragma once

#include <optional>

#include "girthkit/graph.hpp"

namespace girthkit {

/// nullopt girth means the graph is a forest (girth = infinity).
struct GirthResult {
  std::optional<int> girth;
  std::optional<Cycle> witness;

  bool is_infinite() const noexcept { return !girth.has_value(); }
};

/// Exact girth in O(m (n + m)): for every edge (u, v), the shortest u-v path
/// avoiding that edge closes the shortest cycle through it.
GirthResult exact_girth(const Graph& g);

/// Shortest simple cycle through v of length <= bound, if any.
std::optional<Cycle> shortest_cycle_through(const Graph& g, VertexId v, int bound);

/// True iff some simple cycle of length <= bound contains v.
bool on_short_cycle(const Graph& g, VertexId v, int bound);

/// A shortest cycle if the girth is <= bound, otherwise nullopt (exact).
std::optional<Cycle> has_cycle_at_most(const Graph& g, int bound);

}  // namespace girthkit
