#include "girthkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "girthkit/error.hpp"

namespace girthkit {

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("RngStream::below: bound must be positive");
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

EdgeSample sample_hitting_set(const Graph& g, double target, RngStream& rng, double strength) {
  if (!(target >= 1.0)) throw PreconditionError("sample_hitting_set: target must be >= 1");
  if (!(strength > 0.0)) throw PreconditionError("sample_hitting_set: strength must be > 0");
  const double n = static_cast<double>(std::max<std::size_t>(g.active_vertex_count(), 2));
  EdgeSample sample;
  sample.target = target;
  sample.inclusion_probability = std::min(1.0, strength * std::log(n) / target);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (!g.is_active(u)) continue;
    for (VertexId v : g.neighbors(u)) {
      if (u < v && rng.bernoulli(sample.inclusion_probability)) sample.edges.push_back({u, v});
    }
  }
  return sample;
}

std::vector<VertexId> endpoints(const EdgeSample& sample) {
  std::vector<VertexId> out;
  out.reserve(2 * sample.edges.size());
  for (const Edge& e : sample.edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace girthkit
