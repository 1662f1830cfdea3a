#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace girthkit {

struct BenchPoint {
  std::size_t n = 0;
  std::size_t m = 0;
  double median_ms = 0.0;
  std::vector<double> samples_ms;
};

struct BenchResult {
  int k = 3;
  std::vector<BenchPoint> points;
  double slope = 0.0;           // fitted d ln(time) / d ln(m)
  double reference_exponent = 0.0;  // 1 + (k-1)/(k+1)
};

/// Ordinary least squares slope of y on x. Needs two distinct x values.
double least_squares_slope(std::span<const std::pair<double, double>> xy);

/// Times two_k_hybrid(k) on G(n, 2n) for each n; each point is the median
/// over `trials` independent graphs.
BenchResult run_scaling_bench(std::span<const std::size_t> sizes, int k, int trials,
                              std::uint64_t seed);

}  // namespace girthkit
