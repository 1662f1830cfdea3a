#include "girthkit/approx.hpp"

#include <charconv>
#include <numeric>

#include "girthkit/error.hpp"

namespace girthkit {
namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw PreconditionError("invalid rational '" + std::string(whole) + "'");
  }
  return v;
}

int ceil_half(int g) { return (g + 1) / 2; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d <= 0 || n < 0) throw PreconditionError("rational must be p/q with p >= 0, q > 0");
  const std::int64_t g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text), 1);
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::int64_t Rational::floor_times(std::int64_t x) const {
  return static_cast<std::int64_t>(static_cast<__int128>(num) * x / den);
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string_view to_string(ApproxMode mode) {
  return mode == ApproxMode::kDense ? "dense" : "sparse";
}

ApproxMode parse_mode(std::string_view text) {
  if (text == "dense") return ApproxMode::kDense;
  if (text == "sparse") return ApproxMode::kSparse;
  throw PreconditionError("mode must be 'dense' or 'sparse', got '" + std::string(text) + "'");
}

void ApproxParams::validate() const {
  if (mode == ApproxMode::kDense) {
    if (ell < 2) throw PreconditionError("dense mode requires ell >= 2");
    if (eps > Rational(1, 1)) throw PreconditionError("dense mode requires eps in [0, 1]");
  } else {
    if (ell < 3) throw PreconditionError("sparse mode requires ell >= 3");
    if (!(eps < Rational(1, 1))) throw PreconditionError("sparse mode requires eps in [0, 1)");
  }
}

GuessParams dense_params(int ell, Rational eps, int guess) {
  ApproxParams{ell, eps, ApproxMode::kDense}.validate();
  if (guess < 3) throw PreconditionError("girth guess must be >= 3");
  const int alpha = ceil_half(guess);
  const int k = ell * alpha - static_cast<int>(eps.floor_times(alpha));
  return {k, alpha};
}

GuessParams sparse_params(int ell, Rational eps, int guess) {
  ApproxParams{ell, eps, ApproxMode::kSparse}.validate();
  if (guess < 3) throw PreconditionError("girth guess must be >= 3");
  const int alpha = ceil_half(guess);
  const int k = ell * (alpha - 1) - static_cast<int>(eps.floor_times(alpha - 1)) - 1;
  return {k, alpha};
}

GuessParams params_for_guess(const ApproxParams& p, int guess) {
  return p.mode == ApproxMode::kDense ? dense_params(p.ell, p.eps, guess)
                                      : sparse_params(p.ell, p.eps, guess);
}

std::int64_t cycle_bound(const ApproxParams& p, int girth) {
  if (girth < 3) throw PreconditionError("cycle_bound: girth must be >= 3");
  const std::int64_t h = ceil_half(girth);
  if (p.mode == ApproxMode::kDense) return 2 * p.ell * h - 2 * p.eps.floor_times(h);
  return 2 * p.ell * (h - 1) - 2 * p.eps.floor_times(h - 1) - 2;
}

ApproxResult girth_approx(const Graph& g, const ApproxParams& params, RngStream& rng,
                          const HybridOptions& options) {
  params.validate();
  ApproxResult result;
  const int cap = static_cast<int>(g.active_vertex_count()) + 1;
  for (int guess = 3; guess <= cap; ++guess) {
    const GuessParams gp = params_for_guess(params, guess);
    HybridOutcome outcome = short_cycle(g, gp.k, gp.alpha, rng, options);
    result.last_guess = guess;
    result.trace.push_back({guess, gp, outcome});
    if (const Cycle* c = found_cycle(outcome)) {
      result.cycle = *c;
      return result;
    }
    if (std::holds_alternative<Acyclic>(outcome)) return result;
  }
  return result;
}

AdtvResult adtv_girth_approx(const Graph& g, const HybridOptions& options) {
  AdtvResult result;
  const int cap = static_cast<int>((g.active_vertex_count() + 1) / 2);
  for (int k = 2; k <= cap; ++k) {
    Graph copy = g;
    HybridOptions o = options;
    o.reference_edges.reset();
    HybridOutcome outcome = two_k_hybrid(copy, k, o);
    result.last_k = k;
    if (const Cycle* c = found_cycle(outcome)) {
      result.cycle = *c;
      return result;
    }
  }
  return result;
}

std::vector<TradeoffRow> tradeoff_table(int ell, int girth, ApproxMode mode) {
  if (girth < 3) throw PreconditionError("tradeoff_table: girth must be >= 3");
  const int alpha = ceil_half(girth);
  std::vector<TradeoffRow> rows;
  for (int j = 0; j <= alpha; ++j) {
    const Rational eps(j, alpha);
    if (mode == ApproxMode::kSparse && j == alpha) break;
    const ApproxParams p{ell, eps, mode};
    TradeoffRow row;
    row.eps = eps;
    if (mode == ApproxMode::kDense) {
      const GuessParams gp = dense_params(ell, eps, girth);
      row.exponent_num = gp.alpha;
      row.exponent_den = gp.k;
    } else {
      const GuessParams gp = sparse_params(ell, eps, girth);
      row.exponent_num = gp.alpha - 1;
      row.exponent_den = gp.k + 1;
    }
    row.cycle_bound = cycle_bound(p, girth);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace girthkit
