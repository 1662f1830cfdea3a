#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>

#include "girthkit/graph.hpp"

namespace girthkit {

/// Uniform random graph with exactly m distinct edges.
struct GnmModel {
  std::size_t n = 0;
  std::size_t m = 0;
};

/// Uniform-ish random d-regular simple graph (configuration model with
/// rejection of loops and parallel pairs).
struct RandomRegularModel {
  std::size_t n = 0;
  std::size_t d = 0;
};

/// Cycle 0-1-...-(L-1)-0 plus `chords` distinct random non-cycle edges.
struct CycleWithChordsModel {
  std::size_t length = 0;
  std::size_t chords = 0;
};

using GeneratorModel = std::variant<GnmModel, RandomRegularModel, CycleWithChordsModel>;

/// Deterministic for a fixed (model, seed). Throws PreconditionError on
/// infeasible parameters.
Graph generate(const GeneratorModel& model, std::uint64_t seed);

std::string describe(const GeneratorModel& model);

// Fixed families used by tests and examples.
Graph cycle_graph(std::size_t length);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);
Graph petersen_graph();

/// Vertex-disjoint union; b's ids are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace girthkit
