#include "girthkit/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "girthkit/error.hpp"
#include "girthkit/oracle.hpp"

namespace girthkit {
namespace {

using boost::multiprecision::cpp_int;

cpp_int ipow(std::uint64_t base, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Largest t with t^k <= n.
std::uint64_t iroot_floor(std::uint64_t n, int k) {
  auto t = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<long double>(n), 1.0L / k)));
  while (t > 0 && ipow(t, k) > n) --t;
  while (ipow(t + 1, k) <= n) ++t;
  return t;
}

// Smallest c with c^k >= n^(k+1), i.e. ceil(n^{(k+1)/k}).
std::uint64_t ceil_pow_ratio(std::uint64_t n, int k) {
  const cpp_int target = ipow(n, k + 1);
  auto c = static_cast<std::uint64_t>(
      std::ceil(std::pow(static_cast<long double>(n), static_cast<long double>(k + 1) / k)));
  while (c > 0 && ipow(c - 1, k) >= target) --c;
  while (ipow(c, k) < target) ++c;
  return c;
}

std::size_t reference_m(const HybridOptions& o, const Graph& g) {
  return o.reference_edges.value_or(g.edge_count());
}

void notify(const HybridOptions& o, const Graph& g, std::string_view stage, int bound,
            std::span<const VertexId> vertices) {
  if (o.observer && !vertices.empty()) o.observer(g, {stage, bound, vertices});
}

// Relabels sparse_or_cycle events with the calling stage.
RemovalObserver relabel(const HybridOptions& o, std::string_view stage) {
  if (!o.observer) return {};
  return [&o, stage](const Graph& g, const RemovalEvent& e) {
    o.observer(g, {stage, e.bound, e.vertices});
  };
}

void require_sparse_route(const Graph& g, const HybridParams& p, const char* who) {
  if (p.alpha < 2 || p.alpha > p.k || 2 * static_cast<std::size_t>(p.k) >= g.active_vertex_count()) {
    throw PreconditionError(std::string(who) + ": requires 2 <= alpha <= k < n/2");
  }
}

}  // namespace

std::string_view outcome_tag(const HybridOutcome& o) {
  switch (o.index()) {
    case 0: return "cycle";
    case 1: return "girth_exceeds";
    default: return "acyclic";
  }
}

HybridParams HybridParams::make(int k, int alpha) {
  if (k < 2 || alpha < 2) throw PreconditionError("hybrid parameters require k >= 2 and alpha >= 2");
  return {k, alpha};
}

double edge_power(std::size_t m, double e) {
  return m == 0 ? 0.0 : std::exp(e * std::log(static_cast<double>(m)));
}

std::size_t dense_edge_threshold(std::size_t n, int k) {
  if (k < 1) throw PreconditionError("dense_edge_threshold: k must be positive");
  // ceil(n (1 + n^{1/k})) = n + ceil(n^{(k+1)/k}) because n is an integer.
  return 1 + n + ceil_pow_ratio(n, k);
}

std::optional<Cycle> two_sparse_or_cycle(Graph& g, int k, const HybridOptions& options) {
  if (k < 2) throw PreconditionError("two_sparse_or_cycle: k must be >= 2");
  if (g.edge_count() == 0) return std::nullopt;
  const double threshold = edge_power(reference_m(options, g), 2.0 / (k + 1));
  for (VertexId s : g.active_vertex_ids()) {
    if (!g.is_active(s)) continue;
    if (static_cast<double>(degree_sum_neighbors(g, s)) < threshold) continue;
    NbrBallResult r = nbr_ball_or_cycle(g, s, k, k);
    if (r.cycle) return r.cycle;
    notify(options, g, "two_sparse_or_cycle", 2 * k, r.removable);
    g.remove_vertices(r.removable);
  }
  return std::nullopt;
}

HybridOutcome two_k_hybrid(Graph& g, int k, const HybridOptions& options) {
  if (k < 2) throw PreconditionError("two_k_hybrid: k must be >= 2");
  HybridOptions o = options;
  if (!o.reference_edges) o.reference_edges = g.edge_count();
  const std::size_t m = *o.reference_edges;

  if (auto c = two_sparse_or_cycle(g, k, o)) return *c;
  if ((k - 1) % 2 != 0) {
    const double d = std::max(1.0, edge_power(m, 1.0 / (k + 1)));
    if (auto c = sparse_or_cycle(g, d, 1, k, relabel(o, "two_k_hybrid"))) return *c;
  }
  if (auto c = all_vtx_ball_or_cycle(g, k)) return *c;
  return GirthExceeds{2 * k};
}

Cycle short_cycle_dense(const Graph& g, int k) {
  if (k < 2) throw PreconditionError("short_cycle_dense: k must be >= 2");
  const std::size_t n = g.active_vertex_count();
  const std::size_t need = dense_edge_threshold(n, k);
  if (g.edge_count() < need) {
    throw PreconditionError("short_cycle_dense: needs at least " + std::to_string(need) +
                            " edges, graph has " + std::to_string(g.edge_count()));
  }
  std::vector<Edge> edges = g.active_edges();
  edges.resize(need);
  Graph sub = Graph::from_edges(g.vertex_count(), edges);

  // Peel vertices of degree <= 1 + n^{1/k}; for integer degrees this is
  // deg <= 1 + floor(n^{1/k}).
  const std::size_t peel = 1 + iroot_floor(n, k);
  std::set<VertexId> work;
  for (VertexId v = 0; v < sub.vertex_count(); ++v) {
    if (sub.degree(v) > 0 && sub.degree(v) <= peel) work.insert(v);
  }
  while (!work.empty()) {
    const VertexId a = *work.begin();
    work.erase(work.begin());
    for (VertexId b : sub.neighbors(a)) {
      if (sub.degree(b) - 1 <= peel) work.insert(b);
    }
    const VertexId one[] = {a};
    sub.remove_vertices(one);
  }

  for (VertexId w = 0; w < sub.vertex_count(); ++w) {
    if (!sub.is_active(w) || sub.degree(w) == 0) continue;
    BallResult r = ball_or_cycle(sub, w, k);
    if (!r.has_cycle()) throw std::logic_error("short_cycle_dense: high-degree core is acyclic");
    return r.cycle();
  }
  throw std::logic_error("short_cycle_dense: peeling removed every vertex");
}

std::optional<Cycle> bfs_sample(Graph& g, const HybridParams& params, RngStream& rng,
                                const HybridOptions& options) {
  require_sparse_route(g, params, "bfs_sample");
  const int k = params.k;
  const int alpha = params.alpha;
  const std::size_t m = reference_m(options, g);
  if (g.edge_count() == 0) return std::nullopt;

  std::vector<std::uint8_t> marked(g.vertex_count(), 0);
  std::vector<VertexId> doomed;
  for (int i = 1; i <= params.y(); ++i) {
    const double target =
        std::max(1.0, edge_power(m, 1.0 - static_cast<double>(i) * (alpha - 1) / (k + 1)));
    const EdgeSample sample = sample_hitting_set(g, target, rng, options.hitting_constant);
    const int ki = (k + 1) - (i - 1) * (alpha - 1);

    doomed.clear();
    auto add = [&](VertexId v) {
      if (!marked[v]) {
        marked[v] = 1;
        doomed.push_back(v);
      }
    };
    for (VertexId s : endpoints(sample)) {
      if (!g.is_active(s)) continue;
      if (i == 1) {
        NbrBallResult r = nbr_ball_or_cycle(g, s, k, alpha);
        if (r.cycle) return r.cycle;
        for (VertexId v : r.removable) add(v);
      } else {
        BallResult r = ball_or_cycle(g, s, ki);
        if (r.has_cycle()) return r.cycle();
        for (const BallVertex& b : r.prefix(ki - alpha)) add(b.vertex);
      }
    }
    for (VertexId v : doomed) marked[v] = 0;
    std::sort(doomed.begin(), doomed.end());
    notify(options, g, "bfs_sample", 2 * alpha, doomed);
    g.remove_vertices(doomed);
  }
  return std::nullopt;
}

std::vector<int> reminder_sequence(int k, int alpha) {
  if (alpha < 2 || k < 1) throw PreconditionError("reminder_sequence: requires alpha >= 2, k >= 1");
  const int a = alpha - 1;
  int r = (k + 1) % a;
  if (r == 0) {
    throw PreconditionError("reminder_sequence: (k+1) is divisible by alpha-1");
  }
  std::vector<int> seq{r};
  while (a % r != 0) {
    r = ((a + r - 1) / r) * r - a;
    seq.push_back(r);
  }
  return seq;
}

std::optional<Cycle> handle_reminder(Graph& g, const HybridParams& params,
                                     const HybridOptions& options) {
  if (params.alpha < 2 || params.r() == 0) {
    throw PreconditionError("handle_reminder: requires (k+1) mod (alpha-1) > 0");
  }
  if (params.q() < 1) throw PreconditionError("handle_reminder: requires k + 1 >= alpha - 1");
  const double d =
      std::max(1.0, edge_power(reference_m(options, g), 1.0 / (params.k + 1)));
  const std::vector<int> seq = reminder_sequence(params.k, params.alpha);
  const RemovalObserver observer = relabel(options, "handle_reminder");
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (auto c = sparse_or_cycle(g, d, seq[i], params.alpha, observer)) return c;
  }
  return std::nullopt;
}

HybridOutcome short_cycle_sparse(Graph& g, const HybridParams& params, RngStream& rng,
                                 const HybridOptions& options) {
  require_sparse_route(g, params, "short_cycle_sparse");
  HybridOptions o = options;
  if (!o.reference_edges) o.reference_edges = g.edge_count();

  if (auto c = bfs_sample(g, params, rng, o)) return *c;
  if (params.r() != 0) {
    if (auto c = handle_reminder(g, params, o)) return *c;
  }
  if (auto c = all_vtx_ball_or_cycle(g, params.alpha)) return *c;
  return GirthExceeds{2 * params.alpha};
}

HybridOutcome special_cases(const Graph& g, int k, int alpha) {
  const std::size_t n = g.active_vertex_count();
  if (2 * static_cast<std::size_t>(std::max(k, 0)) >= n) {
    // With radius n the ball is the whole component, so one search per
    // component decides whether the graph has any cycle at all.
    std::vector<std::uint8_t> covered(g.vertex_count(), 0);
    const int radius = static_cast<int>(std::max<std::size_t>(n, 1));
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (!g.is_active(w) || covered[w]) continue;
      BallResult r = ball_or_cycle(g, w, radius);
      if (r.has_cycle()) return r.cycle();
      for (const BallVertex& b : r.ball()) covered[b.vertex] = 1;
    }
    return Acyclic{};
  }
  if (k <= alpha - 1) {
    if (auto c = has_cycle_at_most(g, 2 * alpha)) return *c;
    return GirthExceeds{2 * alpha};
  }
  throw PreconditionError("special_cases: requires k >= n/2 or k <= alpha - 1");
}

HybridOutcome short_cycle(const Graph& g, int k, int alpha, RngStream& rng,
                          const HybridOptions& options) {
  const HybridParams params = HybridParams::make(k, alpha);
  const std::size_t n = g.active_vertex_count();
  const std::size_t m = g.edge_count();
  if (m >= dense_edge_threshold(n, k)) return short_cycle_dense(g, k);
  if (alpha <= k && 2 * static_cast<std::size_t>(k) < n) {
    Graph work = g;
    HybridOptions o = options;
    o.reference_edges = m;
    return short_cycle_sparse(work, params, rng, o);
  }
  return special_cases(g, k, alpha);
}

}  // namespace girthkit
