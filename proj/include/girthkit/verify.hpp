#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthkit/approx.hpp"
#include "girthkit/corpus.hpp"
#include "girthkit/hybrid.hpp"
#include "girthkit/oracle.hpp"
#include "girthkit/sampling.hpp"

// Contract checks against the exact oracle. Each returns a description of
// the first violation, or nullopt when the result is consistent.

namespace girthkit {

std::optional<std::string> check_short_cycle(const Graph& g, const HybridOutcome& outcome, int k,
                                             int alpha, const GirthResult& truth);
std::optional<std::string> check_two_k_hybrid(const Graph& g, const HybridOutcome& outcome, int k,
                                              const GirthResult& truth);
std::optional<std::string> check_adtv(const Graph& g, const std::optional<Cycle>& cycle,
                                      const GirthResult& truth);
std::optional<std::string> check_approx(const Graph& g, const ApproxParams& params,
                                        const ApproxResult& result, const GirthResult& truth);

/// The ceil(s) active edges closest to v: ordered by d(v, e), ties broken
/// by (min id, max id). Fewer if v's component has fewer edges.
std::vector<Edge> closest_edges(const Graph& g, VertexId v, double s);

/// Number of vertices whose ceil(target) closest edges the sample misses
/// entirely. Vertices whose component holds fewer than ceil(target) edges
/// are skipped.
std::size_t hitting_misses(const Graph& g, const EdgeSample& sample);

/// Removal observer that asks the oracle whether each deleted vertex lies on
/// a cycle within the stated bound, in the graph as it was just before the
/// deletion.
class RemovalAudit {
 public:
  RemovalObserver observer();

  std::size_t events() const { return events_; }
  std::size_t vertices() const { return vertices_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::size_t events_ = 0;
  std::size_t vertices_ = 0;
  std::vector<std::string> violations_;
};

struct CheckTally {
  std::size_t runs = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  // first few failure descriptions

  void record(const std::optional<std::string>& violation, const std::string& context);
  bool ok() const { return failures == 0; }
};

struct CorpusReport {
  std::size_t graphs = 0;
  std::size_t cyclic_graphs = 0;
  CheckTally short_cycle;
  CheckTally two_k_hybrid;
  CheckTally removal;  // one run per removed vertex
  std::size_t removal_events = 0;
  CheckTally adtv;
  CheckTally approx_dense;
  CheckTally approx_sparse;

  bool ok() const;
};

struct CorpusOptions {
  int seeds = 3;
  std::uint64_t seed = 1;
  double hitting_constant = kDefaultHittingConstant;
  int max_k = 6;
  bool check_approx = true;
};

/// Runs every hybrid and approximation driver over the corpus and checks
/// each result against the oracle.
CorpusReport verify_corpus(const std::vector<CorpusEntry>& corpus, const CorpusOptions& options);

}  // namespace girthkit
