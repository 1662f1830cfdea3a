#include "girthkit/verify.hpp"

#include <algorithm>
#include <cmath>

namespace girthkit {
namespace {

constexpr std::size_t kKeptExamples = 5;

std::string girth_text(const GirthResult& t) {
  return t.girth ? std::to_string(*t.girth) : "infinite";
}

std::optional<std::string> check_cycle_against(const Graph& g, const Cycle& c, std::int64_t bound) {
  if (!validate_cycle(g, c)) return "returned cycle does not validate against the input";
  if (static_cast<std::int64_t>(c.length()) > bound) {
    return "cycle length " + std::to_string(c.length()) + " exceeds bound " +
           std::to_string(bound);
  }
  return std::nullopt;
}

std::optional<std::string> check_certificate(const HybridOutcome& outcome,
                                             const GirthResult& truth) {
  if (const auto* ex = std::get_if<GirthExceeds>(&outcome)) {
    if (truth.girth && *truth.girth <= ex->bound) {
      return "certified girth > " + std::to_string(ex->bound) + " but girth is " +
             girth_text(truth);
    }
  } else if (std::holds_alternative<Acyclic>(outcome) && truth.girth) {
    return "reported acyclic but girth is " + girth_text(truth);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_short_cycle(const Graph& g, const HybridOutcome& outcome, int k,
                                             int alpha, const GirthResult& truth) {
  if (const Cycle* c = found_cycle(outcome)) {
    std::int64_t bound = 2 * k;
    if (truth.girth) bound = std::max<std::int64_t>(bound, *truth.girth);
    return check_cycle_against(g, *c, bound);
  }
  if (const auto* ex = std::get_if<GirthExceeds>(&outcome); ex && ex->bound != 2 * alpha) {
    return "certificate bound " + std::to_string(ex->bound) + " is not 2*alpha";
  }
  return check_certificate(outcome, truth);
}

std::optional<std::string> check_two_k_hybrid(const Graph& g, const HybridOutcome& outcome, int k,
                                              const GirthResult& truth) {
  if (const Cycle* c = found_cycle(outcome)) return check_cycle_against(g, *c, 2 * k);
  if (std::holds_alternative<Acyclic>(outcome)) return "two_k_hybrid never reports acyclic";
  if (std::get<GirthExceeds>(outcome).bound != 2 * k) return "certificate bound is not 2k";
  return check_certificate(outcome, truth);
}

std::optional<std::string> check_adtv(const Graph& g, const std::optional<Cycle>& cycle,
                                      const GirthResult& truth) {
  if (!cycle) {
    if (truth.girth) return "reported acyclic but girth is " + girth_text(truth);
    return std::nullopt;
  }
  if (!truth.girth) return "returned a cycle on a forest";
  if (auto v = check_cycle_against(g, *cycle, *truth.girth + 1)) return v;
  if (static_cast<int>(cycle->length()) < *truth.girth) return "cycle shorter than the girth";
  return std::nullopt;
}

std::optional<std::string> check_approx(const Graph& g, const ApproxParams& params,
                                        const ApproxResult& result, const GirthResult& truth) {
  if (!result.cycle) {
    if (truth.girth) return "reported acyclic but girth is " + girth_text(truth);
    return std::nullopt;
  }
  if (!truth.girth) return "returned a cycle on a forest";
  const int gth = *truth.girth;
  if (auto v = check_cycle_against(g, *result.cycle, cycle_bound(params, gth))) return v;

  // Exact form of the closed-form bounds: len <= (l - eps) g + l + 2 (dense)
  // and len <= (l - eps) g - l + 2 eps (sparse).
  const std::int64_t len = static_cast<std::int64_t>(result.cycle->length());
  const std::int64_t num = params.eps.num;
  const std::int64_t den = params.eps.den;
  const std::int64_t scaled = (params.ell * den - num) * gth;
  const std::int64_t rhs = params.mode == ApproxMode::kDense
                               ? scaled + (params.ell + 2) * den
                               : scaled - params.ell * den + 2 * num;
  if (len * den > rhs) return "cycle length " + std::to_string(len) + " exceeds (l-eps)g form";

  for (std::size_t i = 0; i + 1 < result.trace.size(); ++i) {
    const GuessRecord& r = result.trace[i];
    const auto* ex = std::get_if<GirthExceeds>(&r.outcome);
    if (!ex || ex->bound != 2 * r.params.alpha) {
      return "guess " + std::to_string(r.guess) + " neither returned nor certified 2*alpha";
    }
  }
  // Every earlier guess certified g > 2 ceil((g'-1)/2) >= g' - 1.
  if (gth < result.last_guess) {
    return "returned at guess " + std::to_string(result.last_guess) + " above the girth " +
           std::to_string(gth);
  }
  return std::nullopt;
}

std::vector<Edge> closest_edges(const Graph& g, VertexId v, double s) {
  std::vector<int> dist(g.vertex_count(), -1);
  for (auto [u, d] : bfs_distances(g, v, static_cast<int>(g.vertex_count()))) dist[u] = d;
  std::vector<std::pair<int, Edge>> ranked;
  for (const Edge& e : g.active_edges()) {
    if (dist[e.u] < 0) continue;
    ranked.push_back({std::min(dist[e.u], dist[e.v]) + 1, e});
  }
  const auto want = static_cast<std::size_t>(std::ceil(s));
  const std::size_t take = std::min(want, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take), ranked.end());
  std::vector<Edge> out;
  for (std::size_t i = 0; i < take; ++i) out.push_back(ranked[i].second);
  return out;
}

std::size_t hitting_misses(const Graph& g, const EdgeSample& sample) {
  std::size_t misses = 0;
  const auto want = static_cast<std::size_t>(std::ceil(sample.target));
  for (VertexId v : g.active_vertex_ids()) {
    if (g.degree(v) == 0) continue;
    const std::vector<Edge> near = closest_edges(g, v, sample.target);
    // A component with fewer than ceil(s) edges has no s-closest set to hit.
    if (near.size() < want) continue;
    bool hit = false;
    for (const Edge& e : near) {
      if (std::binary_search(sample.edges.begin(), sample.edges.end(), e)) {
        hit = true;
        break;
      }
    }
    misses += !hit;
  }
  return misses;
}

RemovalObserver RemovalAudit::observer() {
  return [this](const Graph& g, const RemovalEvent& e) {
    ++events_;
    for (VertexId v : e.vertices) {
      ++vertices_;
      if (on_short_cycle(g, v, e.bound)) {
        violations_.push_back(std::string(e.stage) + " removed vertex " + std::to_string(v) +
                              " which lies on a cycle of length <= " + std::to_string(e.bound));
      }
    }
  };
}

void CheckTally::record(const std::optional<std::string>& violation, const std::string& context) {
  ++runs;
  if (!violation) return;
  ++failures;
  if (examples.size() < kKeptExamples) examples.push_back(context + ": " + *violation);
}

bool CorpusReport::ok() const {
  return short_cycle.ok() && two_k_hybrid.ok() && removal.ok() && adtv.ok() &&
         approx_dense.ok() && approx_sparse.ok();
}

CorpusReport verify_corpus(const std::vector<CorpusEntry>& corpus, const CorpusOptions& options) {
  CorpusReport report;
  const RngStream master(options.seed);
  std::vector<ApproxParams> grids;
  for (int ell : {2, 3}) {
    for (int j = 0; j <= 3; ++j) grids.push_back({ell, Rational(j, 3), ApproxMode::kDense});
  }
  for (int j = 0; j <= 1; ++j) grids.push_back({3, Rational(j, 2), ApproxMode::kSparse});

  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const CorpusEntry& entry = corpus[gi];
    const Graph& g = entry.graph;
    const GirthResult truth = exact_girth(g);
    ++report.graphs;
    if (truth.girth) ++report.cyclic_graphs;

    RemovalAudit audit;
    HybridOptions hopts;
    hopts.hitting_constant = options.hitting_constant;
    hopts.observer = audit.observer();

    for (int k = 2; k <= options.max_k; ++k) {
      for (int alpha = 2; alpha <= k; ++alpha) {
        for (int s = 0; s < options.seeds; ++s) {
          RngStream rng = master.split(gi).split(static_cast<std::uint64_t>(k * 100 + alpha)).split(s);
          const HybridOutcome out = short_cycle(g, k, alpha, rng, hopts);
          report.short_cycle.record(check_short_cycle(g, out, k, alpha, truth),
                                    entry.name + " k=" + std::to_string(k) +
                                        " alpha=" + std::to_string(alpha) +
                                        " seed=" + std::to_string(s));
        }
      }
      Graph copy = g;
      const HybridOutcome out = two_k_hybrid(copy, k, hopts);
      report.two_k_hybrid.record(check_two_k_hybrid(g, out, k, truth),
                                 entry.name + " k=" + std::to_string(k));
    }

    if (truth.girth) {
      report.adtv.record(check_adtv(g, adtv_girth_approx(g, hopts).cycle, truth), entry.name);
      if (options.check_approx) {
        for (std::size_t p = 0; p < grids.size(); ++p) {
          RngStream rng = master.split(gi).split(1000 + p);
          const ApproxResult r = girth_approx(g, grids[p], rng, hopts);
          CheckTally& tally =
              grids[p].mode == ApproxMode::kDense ? report.approx_dense : report.approx_sparse;
          tally.record(check_approx(g, grids[p], r, truth),
                       entry.name + " " + std::string(to_string(grids[p].mode)) +
                           " ell=" + std::to_string(grids[p].ell) + " eps=" + grids[p].eps.str());
        }
      }
    }

    report.removal_events += audit.events();
    report.removal.runs += audit.vertices();
    report.removal.failures += audit.violations().size();
    for (const std::string& v : audit.violations()) {
      if (report.removal.examples.size() < kKeptExamples) {
        report.removal.examples.push_back(entry.name + ": " + v);
      }
    }
  }
  return report;
}

}  // namespace girthkit
