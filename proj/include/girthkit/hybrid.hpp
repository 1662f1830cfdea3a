#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "girthkit/graph.hpp"
#include "girthkit/primitives.hpp"
#include "girthkit/sampling.hpp"

namespace girthkit {

/// Certificate that the input graph has no cycle of length <= bound.
struct GirthExceeds {
  int bound = 0;
  friend bool operator==(const GirthExceeds&, const GirthExceeds&) = default;
};

/// The input graph is a forest.
struct Acyclic {
  friend bool operator==(const Acyclic&, const Acyclic&) = default;
};

using HybridOutcome = std::variant<Cycle, GirthExceeds, Acyclic>;

inline const Cycle* found_cycle(const HybridOutcome& o) { return std::get_if<Cycle>(&o); }
std::string_view outcome_tag(const HybridOutcome& o);

/// (k, alpha) with the derived quantities used by the sampling pipeline:
/// y = ceil((k+1)/(alpha-1)) - 1 and k + 1 = q (alpha - 1) + r.
struct HybridParams {
  int k = 2;
  int alpha = 2;

  int y() const { return (k + 1 + alpha - 2) / (alpha - 1) - 1; }
  int q() const { return (k + 1) / (alpha - 1); }
  int r() const { return (k + 1) % (alpha - 1); }

  /// Throws PreconditionError unless k >= 2 and alpha >= 2.
  static HybridParams make(int k, int alpha);
};

struct HybridOptions {
  double hitting_constant = kDefaultHittingConstant;
  /// Sees every deletion, before it happens.
  RemovalObserver observer;
  /// Edge count that exponent thresholds are computed from. Top-level entry
  /// points pin this to the input's edge count; nested calls inherit it.
  std::optional<std::size_t> reference_edges;
};

/// m^e as every exponent threshold computes it, exp(e ln m); 0 when m = 0.
double edge_power(std::size_t m, double e);

/// 1 + ceil(n (1 + n^{1/k})), computed exactly.
std::size_t dense_edge_threshold(std::size_t n, int k);

/// Visits vertices s with sum_{v in N(s)} deg(v) >= m^{2/(k+1)} and runs the
/// neighborhood search on each. Returns a cycle of length <= 2k, or deletes
/// only vertices on no cycle of length <= 2k, after which every survivor u
/// has |E_u^2| < m^{2/(k+1)}.
std::optional<Cycle> two_sparse_or_cycle(Graph& g, int k, const HybridOptions& options = {});

/// 2k-hybrid: Cycle of length <= 2k, or GirthExceeds(2k). Mutates `g`.
HybridOutcome two_k_hybrid(Graph& g, int k, const HybridOptions& options = {});

/// Requires m >= dense_edge_threshold(n, k); returns a cycle of length <= 2k.
Cycle short_cycle_dense(const Graph& g, int k);

/// Iterative hitting-set sampling that either returns a cycle of length
/// <= 2k or deletes vertices on no cycle of length <= 2 alpha, leaving
/// (whp) |E_u^{(k+1) - y(alpha-1)}| < m^{1 - y(alpha-1)/(k+1)} for every
/// survivor. Requires 2 <= alpha <= k < n/2. Mutates `g`.
std::optional<Cycle> bfs_sample(Graph& g, const HybridParams& params, RngStream& rng,
                                const HybridOptions& options = {});

/// r_1 = (k+1) mod (alpha-1), r_{i+1} = ceil((alpha-1)/r_i) r_i - (alpha-1),
/// stopping at the first term dividing alpha - 1. Throws when r_1 = 0.
std::vector<int> reminder_sequence(int k, int alpha);

/// Runs sparse_or_cycle(g, m^{1/(k+1)}, r_{i+1}, alpha) along the remainder
/// sequence. Throws when (k+1) mod (alpha-1) = 0. Mutates `g`.
std::optional<Cycle> handle_reminder(Graph& g, const HybridParams& params,
                                     const HybridOptions& options = {});

/// (2k, 2 alpha)-hybrid for 2 <= alpha <= k < n/2. Mutates `g`.
HybridOutcome short_cycle_sparse(Graph& g, const HybridParams& params, RngStream& rng,
                                 const HybridOptions& options = {});

/// Handles k >= n/2 (whole-component search) and k <= alpha - 1 (exact
/// search up to 2 alpha). Throws otherwise.
HybridOutcome special_cases(const Graph& g, int k, int alpha);

/// (max{2k, g}, 2 alpha)-hybrid. Never mutates `g`.
HybridOutcome short_cycle(const Graph& g, int k, int alpha, RngStream& rng,
                          const HybridOptions& options = {});

}  // namespace girthkit
