#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <fstream>
#include <sstream>

#include "girthkit/corpus.hpp"
#include "girthkit/error.hpp"
#include "girthkit/generators.hpp"
#include "girthkit/oracle.hpp"
#include "girthkit/sampling.hpp"
#include "support.hpp"

using namespace girthkit;

namespace {

// Depth-first enumeration of simple cycles through `start`. With
// `smallest_first`, only vertices >= start are used, so each cycle is found
// once from its smallest vertex. Returns the shortest length below `limit`.
int shortest_by_enumeration(const Graph& g, VertexId start, int limit,
                            bool smallest_first = true) {
  std::vector<char> on_path(g.vertex_count(), 0);
  int best = INT_MAX;
  std::vector<VertexId> path{start};
  on_path[start] = 1;
  auto dfs = [&](auto&& self, VertexId u, int len) -> void {
    if (len >= std::min(limit, best)) return;
    for (VertexId w : g.neighbors(u)) {
      if (smallest_first && w < start) continue;
      if (w == start && len >= 2) {
        best = std::min(best, len + 1);
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      self(self, w, len + 1);
      on_path[w] = 0;
    }
  };
  dfs(dfs, start, 0);
  return best;
}

// Second, independent girth estimate: BFS from every root, closing at the
// first non-tree edge. The minimum lies in [g, g + 1].
std::optional<int> first_closure_estimate(const Graph& g) {
  std::optional<int> best;
  for (VertexId r = 0; r < g.vertex_count(); ++r) {
    std::vector<int> d(g.vertex_count(), -1);
    std::vector<VertexId> parent(g.vertex_count(), 0);
    std::vector<VertexId> q{r};
    d[r] = 0;
    bool closed = false;
    for (std::size_t h = 0; h < q.size() && !closed; ++h) {
      VertexId a = q[h];
      for (VertexId b : g.neighbors(a)) {
        if (d[b] < 0) {
          d[b] = d[a] + 1;
          parent[b] = a;
          q.push_back(b);
        } else if (b != parent[a]) {
          int len = d[a] + d[b] + 1;
          if (!best || len < *best) best = len;
          closed = true;
          break;
        }
      }
    }
  }
  return best;
}

std::vector<int> frozen_corpus_girths() {
  std::ifstream in(GIRTHKIT_TEST_DATA "/corpus_girth.txt");
  REQUIRE(in.good());
  std::vector<int> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::size_t idx = 0, m = 0;
    int g = 0;
    ls >> idx >> m >> g;
    REQUIRE(idx == out.size());
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("exact_girth examples") {
  GirthResult t = exact_girth(testing::triangle());
  REQUIRE(t.girth);
  CHECK(*t.girth == 3);
  CHECK(validate_cycle(testing::triangle(), *t.witness));

  GirthResult p = exact_girth(petersen_graph());
  REQUIRE(p.girth);
  CHECK(*p.girth == 5);
  CHECK(p.witness->length() == 5);
  CHECK(validate_cycle(petersen_graph(), *p.witness));

  CHECK(exact_girth(path_graph(10)).is_infinite());
  CHECK(exact_girth(star_graph(6)).is_infinite());
  CHECK(exact_girth(Graph(0)).is_infinite());
  CHECK(*exact_girth(complete_graph(8)).girth == 3);
  CHECK(*exact_girth(cycle_graph(17)).girth == 17);
}

TEST_CASE("exact_girth matches frozen corpus values") {
  const std::vector<int> frozen = frozen_corpus_girths();
  const auto corpus = standard_corpus();
  REQUIRE(frozen.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const GirthResult r = exact_girth(corpus[i].graph);
    CHECK_MESSAGE((r.girth ? *r.girth : -1) == frozen[i], corpus[i].name);
    if (r.witness) {
      CHECK(validate_cycle(corpus[i].graph, *r.witness));
      CHECK(static_cast<int>(r.witness->length()) == *r.girth);
    }
  }
}

TEST_CASE("no cycle shorter than the girth exists (exhaustive, n <= 64)") {
  RngStream rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 8 + rng.below(57);
    const std::size_t m = n + rng.below(n);
    Graph g = generate(GnmModel{n, m}, rng.next_u64());
    const GirthResult r = exact_girth(g);
    int shortest = INT_MAX;
    const int limit = r.girth ? *r.girth + 1 : 40;
    for (VertexId v = 0; v < n; ++v) shortest = std::min(shortest, shortest_by_enumeration(g, v, limit));
    if (r.girth) {
      CHECK(shortest == *r.girth);
    } else {
      CHECK(shortest == INT_MAX);
    }
  }
}

TEST_CASE("second method brackets the girth within +1") {
  RngStream rng(8);
  const auto corpus = standard_corpus(120, 99);
  for (const auto& e : corpus) {
    const GirthResult r = exact_girth(e.graph);
    const auto est = first_closure_estimate(e.graph);
    REQUIRE(r.girth.has_value() == est.has_value());
    if (r.girth) {
      CHECK(*r.girth <= *est);
      CHECK(*est <= *r.girth + 1);
    }
  }
}

TEST_CASE("on_short_cycle examples") {
  Graph c5 = cycle_graph(5);
  CHECK(on_short_cycle(c5, 0, 5));
  CHECK_FALSE(on_short_cycle(c5, 0, 4));

  Graph pendant = testing::make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  CHECK_FALSE(on_short_cycle(pendant, 5, 100));
  CHECK(on_short_cycle(pendant, 0, 100));
  CHECK_THROWS_AS(on_short_cycle(Graph(0), 0, 5), PreconditionError);
}

TEST_CASE("on_short_cycle agrees with enumeration and is monotone in the bound") {
  RngStream rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 8 + rng.below(13);
    Graph g = generate(GnmModel{n, n + rng.below(n / 2 + 1)}, rng.next_u64());
    for (VertexId v = 0; v < n; ++v) {
      const int through_v = shortest_by_enumeration(g, v, 64, false);
      bool prev = false;
      for (int L = 3; L <= static_cast<int>(n) + 1; ++L) {
        const bool got = on_short_cycle(g, v, L);
        CHECK(got == (through_v <= L));
        CHECK((!prev || got));
        prev = got;
        if (auto c = shortest_cycle_through(g, v, L)) {
          CHECK(validate_cycle(g, *c));
          CHECK(static_cast<int>(c->length()) == through_v);
        }
      }
    }
  }
}

TEST_CASE("has_cycle_at_most examples and equivalence") {
  CHECK_FALSE(has_cycle_at_most(cycle_graph(5), 4));
  auto c = has_cycle_at_most(cycle_graph(5), 5);
  REQUIRE(c);
  CHECK(c->length() == 5);
  CHECK_FALSE(has_cycle_at_most(path_graph(12), 100));

  for (const auto& e : standard_corpus(80, 3)) {
    const GirthResult r = exact_girth(e.graph);
    for (int L = 3; L <= 12; ++L) {
      const auto found = has_cycle_at_most(e.graph, L);
      CHECK(found.has_value() == (r.girth && *r.girth <= L));
      if (found) {
        CHECK(validate_cycle(e.graph, *found));
        CHECK(static_cast<int>(found->length()) == *r.girth);
      }
    }
  }
}

TEST_CASE("oracle ignores removed vertices") {
  Graph g = disjoint_union(testing::triangle(), cycle_graph(7));
  const VertexId t[] = {1};
  g.remove_vertices(t);
  CHECK(*exact_girth(g).girth == 7);
}
