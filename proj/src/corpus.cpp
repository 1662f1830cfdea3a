#include "girthkit/corpus.hpp"

#include "girthkit/sampling.hpp"

namespace girthkit {
namespace {

constexpr std::size_t kMinN = 8;
constexpr std::size_t kMaxN = 128;
constexpr int kFamilies = 7;

std::size_t draw_n(RngStream& rng, std::size_t lo) {
  return lo + static_cast<std::size_t>(rng.below(kMaxN - lo + 1));
}

GeneratorModel pick_model(int family, RngStream& rng) {
  switch (family) {
    case 0: {
      std::size_t n = draw_n(rng, kMinN);
      return GnmModel{n, n};
    }
    case 1: {
      std::size_t n = draw_n(rng, kMinN);
      return GnmModel{n, n + n / 2};
    }
    case 2: {
      std::size_t n = draw_n(rng, kMinN);
      return GnmModel{n, 2 * n};
    }
    case 3: {
      // m = 4n needs n(n-1)/2 >= 4n.
      std::size_t n = draw_n(rng, 9);
      return GnmModel{n, 4 * n};
    }
    case 4: {
      std::size_t n = draw_n(rng, kMinN) & ~std::size_t{1};
      return RandomRegularModel{n, 3};
    }
    case 5:
      return RandomRegularModel{draw_n(rng, kMinN), 4};
    default: {
      std::size_t n = draw_n(rng, kMinN);
      return CycleWithChordsModel{n, static_cast<std::size_t>(rng.below(n / 8 + 1))};
    }
  }
}

}  // namespace

std::vector<CorpusEntry> standard_corpus(std::size_t count, std::uint64_t seed) {
  RngStream master(seed);
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RngStream rng = master.split(i);
    GeneratorModel model = pick_model(static_cast<int>(i % kFamilies), rng);
    const std::uint64_t graph_seed = rng.next_u64();
    Graph g = generate(model, graph_seed);
    out.push_back({"#" + std::to_string(i) + " " + describe(model), model, graph_seed, std::move(g)});
  }
  return out;
}

}  // namespace girthkit
