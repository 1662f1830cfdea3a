#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "girthkit/generators.hpp"
#include "girthkit/graph.hpp"

namespace girthkit {

struct CorpusEntry {
  std::string name;
  GeneratorModel model;
  std::uint64_t seed = 0;
  Graph graph;
};

inline constexpr std::size_t kDefaultCorpusSize = 504;

/// Mixed test corpus with n in [8, 128]: G(n, m) at m/n in {1, 1.5, 2, 4},
/// random 3- and 4-regular graphs, and cycles with random chords, taken in
/// round-robin order. Deterministic in (count, seed).
std::vector<CorpusEntry> standard_corpus(std::size_t count = kDefaultCorpusSize,
                                         std::uint64_t seed = 2024);

}  // namespace girthkit
