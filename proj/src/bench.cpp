#include "girthkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "girthkit/error.hpp"
#include "girthkit/generators.hpp"
#include "girthkit/hybrid.hpp"
#include "girthkit/sampling.hpp"

namespace girthkit {
namespace {

// Short runs are repeated until the batch is long enough for the clock.
constexpr double kMinBatchMs = 20.0;

double time_once_ms(const Graph& g, int k) {
  using Clock = std::chrono::steady_clock;
  int reps = 0;
  double total = 0.0;
  do {
    Graph copy = g;
    const auto start = Clock::now();
    HybridOutcome out = two_k_hybrid(copy, k);
    const auto stop = Clock::now();
    (void)out;
    total += std::chrono::duration<double, std::milli>(stop - start).count();
    ++reps;
  } while (total < kMinBatchMs);
  return total / reps;
}

}  // namespace

double least_squares_slope(std::span<const std::pair<double, double>> xy) {
  if (xy.size() < 2) throw PreconditionError("slope fit needs at least two points");
  double mx = 0.0;
  double my = 0.0;
  for (auto [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(xy.size());
  my /= static_cast<double>(xy.size());
  double sxy = 0.0;
  double sxx = 0.0;
  for (auto [x, y] : xy) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0.0) throw PreconditionError("slope fit needs distinct x values");
  return sxy / sxx;
}

BenchResult run_scaling_bench(std::span<const std::size_t> sizes, int k, int trials,
                              std::uint64_t seed) {
  if (trials < 1) throw PreconditionError("bench needs at least one trial");
  BenchResult result;
  result.k = k;
  result.reference_exponent = 1.0 + static_cast<double>(k - 1) / (k + 1);
  const RngStream master(seed);
  std::vector<std::pair<double, double>> fit;
  for (std::size_t n : sizes) {
    BenchPoint p;
    p.n = n;
    p.m = 2 * n;
    for (int t = 0; t < trials; ++t) {
      const Graph g = generate(GnmModel{n, 2 * n}, master.split(n).split(t).next_u64());
      p.samples_ms.push_back(time_once_ms(g, k));
    }
    std::vector<double> sorted = p.samples_ms;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    p.median_ms = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    fit.emplace_back(std::log(static_cast<double>(p.m)), std::log(p.median_ms));
    result.points.push_back(std::move(p));
  }
  result.slope = least_squares_slope(fit);
  return result;
}

}  // namespace girthkit
