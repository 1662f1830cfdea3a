#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "girthkit/graph.hpp"

namespace girthkit {

/// Deterministic random stream. Output is a pure function of the seed: the
/// engine is std::mt19937_64, whose sequence the standard fixes exactly, and
/// every derived quantity (doubles, bounded integers) is computed here rather
/// than through the implementation-defined <random> distributions.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return p >= 1.0 || (p > 0.0 && uniform() < p); }

  /// Independent child stream keyed by `key`; does not advance this stream.
  RngStream split(std::uint64_t key) const { return RngStream(mix(seed_ ^ mix(key + 1))); }

 private:
  // SplitMix64 finalizer; decorrelates nearby seeds.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct EdgeSample {
  std::vector<Edge> edges;  // (min, max) pairs, lexicographic order
  double target = 1.0;
  double inclusion_probability = 1.0;
};

inline constexpr double kDefaultHittingConstant = 3.0;

/// Samples every active edge independently with probability
/// p = min(1, c * ln(max(n, 2)) / s), n being the active vertex count. Such a
/// sample hits the s closest edges of every vertex with high probability.
/// Requires s >= 1 and c > 0.
EdgeSample sample_hitting_set(const Graph& g, double target, RngStream& rng,
                              double strength = kDefaultHittingConstant);

/// V(S): distinct endpoints of the sampled edges in ascending order.
std::vector<VertexId> endpoints(const EdgeSample& sample);

}  // namespace girthkit
