#include "girthkit/generators.hpp"

#include <algorithm>
#include <unordered_set>

#include "girthkit/error.hpp"
#include "girthkit/sampling.hpp"

namespace girthkit {
namespace {

std::uint64_t edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::size_t max_edges(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

Graph gnm(const GnmModel& p, RngStream& rng) {
  const std::size_t total = max_edges(p.n);
  if (p.m > total) {
    throw PreconditionError("gnm: m = " + std::to_string(p.m) + " exceeds n(n-1)/2 = " +
                            std::to_string(total));
  }
  // Sample the smaller of the edge set and its complement.
  const bool complement = p.m > total / 2;
  const std::size_t draws = complement ? total - p.m : p.m;
  std::unordered_set<std::uint64_t> picked;
  picked.reserve(draws * 2);
  std::vector<Edge> chosen;
  chosen.reserve(draws);
  while (chosen.size() < draws) {
    auto a = static_cast<VertexId>(rng.below(p.n));
    auto b = static_cast<VertexId>(rng.below(p.n));
    if (a == b) continue;
    if (picked.insert(edge_key(a, b)).second) chosen.push_back({a, b});
  }
  if (!complement) return Graph::from_edges(p.n, chosen);
  std::vector<Edge> edges;
  edges.reserve(p.m);
  for (VertexId a = 0; a < p.n; ++a) {
    for (VertexId b = a + 1; b < p.n; ++b) {
      if (!picked.contains(edge_key(a, b))) edges.push_back({a, b});
    }
  }
  return Graph::from_edges(p.n, edges);
}

Graph random_regular(const RandomRegularModel& p, RngStream& rng) {
  if ((p.n * p.d) % 2 != 0) throw PreconditionError("random_regular: n*d must be even");
  if (p.d >= p.n && !(p.n == 0 && p.d == 0)) {
    throw PreconditionError("random_regular: need d < n");
  }
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Pair up points one at a time, picking uniformly among the remaining
    // points and rejecting choices that would create a loop or a parallel
    // edge. Restart when stuck.
    std::vector<VertexId> points;
    points.reserve(p.n * p.d);
    for (VertexId v = 0; v < p.n; ++v) points.insert(points.end(), p.d, v);
    std::unordered_set<std::uint64_t> used;
    std::vector<Edge> edges;
    edges.reserve(p.n * p.d / 2);
    bool stuck = false;
    while (!points.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        auto i = rng.below(points.size());
        auto j = rng.below(points.size());
        VertexId a = points[i];
        VertexId b = points[j];
        if (i == j || a == b || used.contains(edge_key(a, b))) continue;
        used.insert(edge_key(a, b));
        edges.push_back({a, b});
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        placed = true;
      }
      stuck = !placed;
    }
    if (!stuck) return Graph::from_edges(p.n, edges);
  }
  throw PreconditionError("random_regular: failed to build a simple graph");
}

Graph cycle_with_chords(const CycleWithChordsModel& p, RngStream& rng) {
  if (p.length < 3) throw PreconditionError("cycle_with_chords: length must be >= 3");
  const std::size_t capacity = max_edges(p.length) - p.length;
  if (p.chords > capacity) {
    throw PreconditionError("cycle_with_chords: at most " + std::to_string(capacity) +
                            " chords fit");
  }
  std::unordered_set<std::uint64_t> used;
  std::vector<Edge> edges;
  for (VertexId v = 0; v < p.length; ++v) {
    auto w = static_cast<VertexId>((v + 1) % p.length);
    edges.push_back({v, w});
    used.insert(edge_key(v, w));
  }
  std::size_t added = 0;
  if (p.chords * 2 <= capacity) {
    while (added < p.chords) {
      auto a = static_cast<VertexId>(rng.below(p.length));
      auto b = static_cast<VertexId>(rng.below(p.length));
      if (a == b || !used.insert(edge_key(a, b)).second) continue;
      edges.push_back({a, b});
      ++added;
    }
  } else {
    std::vector<Edge> candidates;
    for (VertexId a = 0; a < p.length; ++a) {
      for (VertexId b = a + 1; b < p.length; ++b) {
        if (!used.contains(edge_key(a, b))) candidates.push_back({a, b});
      }
    }
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < p.chords; ++i) {
      auto j = i + rng.below(candidates.size() - i);
      std::swap(candidates[i], candidates[j]);
      edges.push_back(candidates[i]);
    }
  }
  return Graph::from_edges(p.length, edges);
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

Graph generate(const GeneratorModel& model, std::uint64_t seed) {
  RngStream rng(seed);
  return std::visit(Overloaded{
                        [&](const GnmModel& p) { return gnm(p, rng); },
                        [&](const RandomRegularModel& p) { return random_regular(p, rng); },
                        [&](const CycleWithChordsModel& p) { return cycle_with_chords(p, rng); },
                    },
                    model);
}

std::string describe(const GeneratorModel& model) {
  return std::visit(
      Overloaded{
          [](const GnmModel& p) {
            return "gnm(n=" + std::to_string(p.n) + ",m=" + std::to_string(p.m) + ")";
          },
          [](const RandomRegularModel& p) {
            return "random_regular(n=" + std::to_string(p.n) + ",d=" + std::to_string(p.d) + ")";
          },
          [](const CycleWithChordsModel& p) {
            return "cycle_with_chords(L=" + std::to_string(p.length) +
                   ",chords=" + std::to_string(p.chords) + ")";
          },
      },
      model);
}

Graph cycle_graph(std::size_t length) {
  if (length < 3) throw PreconditionError("cycle_graph: length must be >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < length; ++v) {
    edges.push_back({v, static_cast<VertexId>((v + 1) % length)});
  }
  return Graph::from_edges(length, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, 5 + i});
  }
  return Graph::from_edges(10, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.active_edges();
  const auto shift = static_cast<VertexId>(a.vertex_count());
  for (const Edge& e : b.active_edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace girthkit
