#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "girthkit/graph.hpp"
#include "girthkit/hybrid.hpp"
#include "girthkit/sampling.hpp"

namespace girthkit {

/// Nonnegative exact fraction, always stored in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  /// Accepts "p/q", or a bare integer "p".
  static Rational parse(std::string_view text);

  /// floor(this * x) for x >= 0.
  std::int64_t floor_times(std::int64_t x) const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend auto operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

enum class ApproxMode { kDense, kSparse };

std::string_view to_string(ApproxMode mode);
/// "dense" or "sparse"; throws PreconditionError otherwise.
ApproxMode parse_mode(std::string_view text);

struct ApproxParams {
  int ell = 2;
  Rational eps;
  ApproxMode mode = ApproxMode::kDense;

  /// Throws PreconditionError for ell/eps outside the mode's domain.
  void validate() const;
};

struct GuessParams {
  int k = 0;
  int alpha = 0;
};

/// alpha = ceil(g/2), k = ell alpha - floor(eps alpha). Needs ell >= 2,
/// eps in [0, 1], guess >= 3.
GuessParams dense_params(int ell, Rational eps, int guess);
/// alpha = ceil(g/2), k = ell (alpha-1) - floor(eps (alpha-1)) - 1. Needs
/// ell >= 3, eps in [0, 1), guess >= 3.
GuessParams sparse_params(int ell, Rational eps, int guess);
GuessParams params_for_guess(const ApproxParams& p, int guess);

/// Worst-case cycle length the mode guarantees on a graph of girth g.
std::int64_t cycle_bound(const ApproxParams& p, int girth);

struct GuessRecord {
  int guess = 0;
  GuessParams params;
  HybridOutcome outcome;
};

struct ApproxResult {
  std::optional<Cycle> cycle;  // nullopt: the graph is a forest
  int last_guess = 0;
  std::vector<GuessRecord> trace;
};

/// Scans g~ = 3, 4, ..., n+1 and returns the first cycle short_cycle
/// produces.
ApproxResult girth_approx(const Graph& g, const ApproxParams& params, RngStream& rng,
                          const HybridOptions& options = {});

struct AdtvResult {
  std::optional<Cycle> cycle;
  int last_k = 0;
};

/// (+1)-approximation: two_k_hybrid on a fresh copy for k = 2, 3, ...,
/// ceil(n/2). The returned cycle has length g or g + 1.
AdtvResult adtv_girth_approx(const Graph& g, const HybridOptions& options = {});

struct TradeoffRow {
  Rational eps;
  /// Fractional part of the time exponent 1 + num/den, left unreduced so it
  /// reads alpha/k (dense) or (alpha-1)/(k+1) (sparse).
  std::int64_t exponent_num = 0;
  std::int64_t exponent_den = 1;
  std::int64_t cycle_bound = 0;
};

/// Rows for eps = 0, 1/alpha, ..., 1 with alpha = ceil(g/2). Sparse mode
/// drops eps = 1, which lies outside its domain.
std::vector<TradeoffRow> tradeoff_table(int ell, int girth, ApproxMode mode);

}  // namespace girthkit
