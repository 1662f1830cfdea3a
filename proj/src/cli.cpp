#include "girthkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "girthkit/approx.hpp"
#include "girthkit/bench.hpp"
#include "girthkit/corpus.hpp"
#include "girthkit/error.hpp"
#include "girthkit/generators.hpp"
#include "girthkit/hybrid.hpp"
#include "girthkit/oracle.hpp"
#include "girthkit/verify.hpp"

namespace girthkit::cli {

using nlohmann::json;

namespace {

// The O(m(n+m)) oracle is skipped above this size; --verify then only
// validates returned cycles.
constexpr std::size_t kOracleEdgeLimit = 20000;

json girth_to_json(const GirthValue& g) {
  return g.finite ? json(*g.finite) : json("infinite");
}

GirthValue girth_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "infinite") throw std::invalid_argument("bad girth value");
    return {};
  }
  return {j.get<int>()};
}

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void take(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

GirthValue to_value(const GirthResult& r) { return {r.girth}; }

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Options {
  std::string input;
  std::uint64_t seed = 1;
  int k = 0;
  std::optional<int> alpha;
  int ell = 3;
  std::string eps = "0";
  std::string mode = "dense";
  bool verify = false;
  bool csv = false;
  double hitting_constant = kDefaultHittingConstant;

  std::string model;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t degree = 0;
  std::size_t length = 0;
  std::size_t chords = 0;
  std::string output;

  int girth = 5;
  int bench_trials = 5;
  int min_log = 10;
  int max_log = 14;
  std::size_t count = kDefaultCorpusSize;
  int corpus_trials = 3;
};

void set_outcome(RunReport& r, const HybridOutcome& o) {
  r.outcome = std::string(outcome_tag(o));
  if (const Cycle* c = found_cycle(o)) {
    r.cycle = std::vector<VertexId>(c->vertices().begin(), c->vertices().end());
  } else if (const auto* ex = std::get_if<GirthExceeds>(&o)) {
    r.bound = ex->bound;
  }
}

void set_cycle(RunReport& r, const std::optional<Cycle>& c) {
  r.outcome = c ? "cycle" : "acyclic";
  if (c) r.cycle = std::vector<VertexId>(c->vertices().begin(), c->vertices().end());
}

// Runs the oracle if the graph is small enough; records the verdict.
std::optional<GirthResult> oracle_for(const Graph& g, RunReport& r) {
  if (g.edge_count() > kOracleEdgeLimit) return std::nullopt;
  GirthResult truth = exact_girth(g);
  r.oracle_girth = to_value(truth);
  return truth;
}

void record_verdict(RunReport& r, const std::optional<std::string>& violation) {
  if (violation) r.violations.push_back(*violation);
  r.verified = r.violations.empty();
}

void verify_cycle_only(const Graph& g, RunReport& r) {
  if (r.cycle && !validate_cycle(g, Cycle(*r.cycle))) {
    r.violations.push_back("returned cycle does not validate against the input");
  }
  r.verified = r.violations.empty();
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "girthkit";
  for (const std::string& a : args) s += " " + a;
  return s;
}

json tally_json(const CheckTally& t) {
  return {{"runs", t.runs}, {"failures", t.failures}, {"examples", t.examples}};
}

int finish(const RunReport& r, std::ostream& out) {
  out << to_json(r).dump(2) << '\n';
  return r.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_exact(const Options& o, RunReport& r, std::ostream& out) {
  const Graph g = load_edge_list_file(o.input);
  Stopwatch sw;
  const GirthResult res = exact_girth(g);
  r.elapsed_ms = sw.elapsed_ms();
  set_cycle(r, res.witness);
  r.girth = to_value(res);
  if (o.verify) {
    verify_cycle_only(g, r);
    if (res.witness && res.witness->length() != static_cast<std::size_t>(*res.girth)) {
      r.violations.push_back("witness length differs from the reported girth");
      r.verified = false;
    }
  }
  return finish(r, out);
}

int cmd_hybrid(const Options& o, RunReport& r, std::ostream& out) {
  if (o.k < 2) throw PreconditionError("--k must be >= 2");
  const Graph g = load_edge_list_file(o.input);
  HybridOptions hopts;
  hopts.hitting_constant = o.hitting_constant;
  r.params.k = o.k;
  r.params.alpha = o.alpha;
  r.params.hitting_constant = o.hitting_constant;

  Stopwatch sw;
  HybridOutcome outcome;
  if (o.alpha) {
    RngStream rng(o.seed);
    outcome = short_cycle(g, o.k, *o.alpha, rng, hopts);
  } else {
    Graph work = g;
    outcome = two_k_hybrid(work, o.k, hopts);
  }
  r.elapsed_ms = sw.elapsed_ms();
  set_outcome(r, outcome);

  if (o.verify) {
    if (auto truth = oracle_for(g, r)) {
      record_verdict(r, o.alpha ? check_short_cycle(g, outcome, o.k, *o.alpha, *truth)
                                : check_two_k_hybrid(g, outcome, o.k, *truth));
    } else {
      verify_cycle_only(g, r);
    }
  }
  return finish(r, out);
}

int cmd_approx(const Options& o, RunReport& r, std::ostream& out) {
  const ApproxParams params{o.ell, Rational::parse(o.eps), parse_mode(o.mode)};
  params.validate();
  const Graph g = load_edge_list_file(o.input);
  HybridOptions hopts;
  hopts.hitting_constant = o.hitting_constant;
  r.params.ell = params.ell;
  r.params.eps = params.eps.str();
  r.params.mode = std::string(to_string(params.mode));
  r.params.hitting_constant = o.hitting_constant;

  Stopwatch sw;
  RngStream rng(o.seed);
  const ApproxResult res = girth_approx(g, params, rng, hopts);
  r.elapsed_ms = sw.elapsed_ms();
  set_cycle(r, res.cycle);
  if (res.last_guess > 0) {
    r.params.guess_reached = res.last_guess;
    r.params.k = res.trace.back().params.k;
    r.params.alpha = res.trace.back().params.alpha;
  }
  if (o.verify) {
    if (auto truth = oracle_for(g, r)) {
      record_verdict(r, check_approx(g, params, res, *truth));
    } else {
      verify_cycle_only(g, r);
    }
  }
  return finish(r, out);
}

int cmd_adtv(const Options& o, RunReport& r, std::ostream& out) {
  const Graph g = load_edge_list_file(o.input);
  Stopwatch sw;
  const AdtvResult res = adtv_girth_approx(g);
  r.elapsed_ms = sw.elapsed_ms();
  set_cycle(r, res.cycle);
  if (res.last_k > 0) r.params.k = res.last_k;
  if (o.verify) {
    if (auto truth = oracle_for(g, r)) {
      record_verdict(r, check_adtv(g, res.cycle, *truth));
    } else {
      verify_cycle_only(g, r);
    }
  }
  return finish(r, out);
}

GeneratorModel model_from(const Options& o) {
  if (o.model == "gnm") return GnmModel{o.n, o.m};
  if (o.model == "regular") return RandomRegularModel{o.n, o.degree};
  if (o.model == "chords") return CycleWithChordsModel{o.length, o.chords};
  throw PreconditionError("unknown model '" + o.model + "' (expected gnm, regular or chords)");
}

int cmd_gen(const Options& o, RunReport& r, std::ostream& out) {
  const GeneratorModel model = model_from(o);
  const Graph g = generate(model, o.seed);
  if (o.output.empty()) {
    write_edge_list(out, g);
    return kExitOk;
  }
  std::ofstream file(o.output);
  if (!file) throw Error("cannot write " + o.output);
  write_edge_list(file, g);
  r.data = {{"model", describe(model)},
            {"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"output", o.output}};
  return finish(r, out);
}

int cmd_tradeoff(const Options& o, RunReport& r, std::ostream& out) {
  const ApproxMode mode = parse_mode(o.mode);
  const auto rows = tradeoff_table(o.ell, o.girth, mode);
  if (o.csv) {
    out << "eps,exponent_num,exponent_den,cycle_bound\n";
    for (const TradeoffRow& row : rows) {
      out << row.eps.str() << ',' << row.exponent_num << ',' << row.exponent_den << ','
          << row.cycle_bound << '\n';
    }
    return kExitOk;
  }
  r.params.ell = o.ell;
  r.params.mode = std::string(to_string(mode));
  json arr = json::array();
  for (const TradeoffRow& row : rows) {
    arr.push_back({{"eps", row.eps.str()},
                   {"exponent_num", row.exponent_num},
                   {"exponent_den", row.exponent_den},
                   {"exponent",
                    "1+" + std::to_string(row.exponent_num) + "/" + std::to_string(row.exponent_den)},
                   {"cycle_bound", row.cycle_bound}});
  }
  r.data = {{"girth", o.girth}, {"rows", arr}};
  return finish(r, out);
}

int cmd_bench(const Options& o, RunReport& r, std::ostream& out) {
  if (o.min_log < 1 || o.max_log > 24 || o.min_log >= o.max_log) {
    throw PreconditionError("bench needs 1 <= --min-log < --max-log <= 24");
  }
  const int k = o.k == 0 ? 3 : o.k;
  std::vector<std::size_t> sizes;
  for (int e = o.min_log; e <= o.max_log; ++e) sizes.push_back(std::size_t{1} << e);
  Stopwatch sw;
  const BenchResult res = run_scaling_bench(sizes, k, o.bench_trials, o.seed);
  r.elapsed_ms = sw.elapsed_ms();
  if (o.csv) {
    out << "n,m,median_ms\n";
    for (const BenchPoint& p : res.points) out << p.n << ',' << p.m << ',' << p.median_ms << '\n';
    return kExitOk;
  }
  r.params.k = k;
  json pts = json::array();
  for (const BenchPoint& p : res.points) {
    pts.push_back({{"n", p.n}, {"m", p.m}, {"median_ms", p.median_ms}, {"samples_ms", p.samples_ms}});
  }
  r.data = {{"points", pts},
            {"slope", res.slope},
            {"reference_exponent", res.reference_exponent},
            {"trials", o.bench_trials}};
  return finish(r, out);
}

int cmd_verify_corpus(const Options& o, RunReport& r, std::ostream& out) {
  CorpusOptions copts;
  copts.seeds = o.corpus_trials;
  copts.seed = o.seed;
  copts.hitting_constant = o.hitting_constant;
  Stopwatch sw;
  const auto corpus = standard_corpus(o.count, o.seed);
  const CorpusReport rep = verify_corpus(corpus, copts);
  r.elapsed_ms = sw.elapsed_ms();
  r.params.hitting_constant = o.hitting_constant;
  r.data = {{"graphs", rep.graphs},
            {"cyclic_graphs", rep.cyclic_graphs},
            {"removal_events", rep.removal_events},
            {"short_cycle", tally_json(rep.short_cycle)},
            {"two_k_hybrid", tally_json(rep.two_k_hybrid)},
            {"removal_safety", tally_json(rep.removal)},
            {"adtv", tally_json(rep.adtv)},
            {"approx_dense", tally_json(rep.approx_dense)},
            {"approx_sparse", tally_json(rep.approx_sparse)}};
  for (const CheckTally* t : {&rep.short_cycle, &rep.two_k_hybrid, &rep.removal, &rep.adtv,
                              &rep.approx_dense, &rep.approx_sparse}) {
    r.violations.insert(r.violations.end(), t->examples.begin(), t->examples.end());
  }
  r.verified = rep.ok();
  if (!rep.ok() && r.violations.empty()) r.violations.push_back("corpus check failed");
  return finish(r, out);
}

}  // namespace

json to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  put(j, "seed", r.seed);
  put(j, "outcome", r.outcome);
  if (r.cycle) {
    j["cycle"] = *r.cycle;
    j["cycle_length"] = r.cycle->size();
  }
  put(j, "bound", r.bound);
  if (r.girth) j["girth"] = girth_to_json(*r.girth);
  if (r.oracle_girth) j["oracle_girth"] = girth_to_json(*r.oracle_girth);
  put(j, "verified", r.verified);
  if (!r.violations.empty()) j["violations"] = r.violations;

  json p = json::object();
  put(p, "k", r.params.k);
  put(p, "alpha", r.params.alpha);
  put(p, "ell", r.params.ell);
  put(p, "eps", r.params.eps);
  put(p, "mode", r.params.mode);
  put(p, "guess_reached", r.params.guess_reached);
  put(p, "hitting_constant", r.params.hitting_constant);
  if (!p.empty()) j["params"] = p;

  if (!r.data.is_null()) j["data"] = r.data;
  if (r.elapsed_ms) j["timing"] = {{"elapsed_ms", *r.elapsed_ms}};
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  take(j, "seed", r.seed);
  take(j, "outcome", r.outcome);
  if (j.contains("cycle")) r.cycle = j.at("cycle").get<std::vector<VertexId>>();
  take(j, "bound", r.bound);
  if (j.contains("girth")) r.girth = girth_from_json(j.at("girth"));
  if (j.contains("oracle_girth")) r.oracle_girth = girth_from_json(j.at("oracle_girth"));
  take(j, "verified", r.verified);
  if (j.contains("violations")) r.violations = j.at("violations").get<std::vector<std::string>>();
  if (j.contains("params")) {
    const json& p = j.at("params");
    take(p, "k", r.params.k);
    take(p, "alpha", r.params.alpha);
    take(p, "ell", r.params.ell);
    take(p, "eps", r.params.eps);
    take(p, "mode", r.params.mode);
    take(p, "guess_reached", r.params.guess_reached);
    take(p, "hitting_constant", r.params.hitting_constant);
  }
  if (j.contains("data")) r.data = j.at("data");
  if (j.contains("timing")) r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Girth approximation and short-cycle detection for undirected graphs",
               "girthkit"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* c) {
    c->add_option("--input", o.input, "Edge-list file")->required();
  };
  auto seed = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed"); };
  auto verify = [&](CLI::App* c) {
    c->add_flag("--verify", o.verify, "Check the result against the exact oracle");
  };
  auto hitting = [&](CLI::App* c) {
    c->add_option("--hitting-constant", o.hitting_constant, "Sampler constant c")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* exact = app.add_subcommand("exact", "Exact girth by brute force");
  input(exact);
  verify(exact);

  CLI::App* hybrid = app.add_subcommand(
      "hybrid", "Find a short cycle or certify a girth lower bound (2k-hybrid without --alpha)");
  input(hybrid);
  seed(hybrid);
  verify(hybrid);
  hitting(hybrid);
  hybrid->add_option("--k", o.k, "Cycle length parameter k >= 2")->required();
  hybrid->add_option("--alpha", o.alpha, "Certificate parameter alpha >= 2");

  CLI::App* approx = app.add_subcommand("approx", "Dense or sparse girth approximation");
  input(approx);
  seed(approx);
  verify(approx);
  hitting(approx);
  approx->add_option("--ell", o.ell, "Tradeoff parameter ell");
  approx->add_option("--eps", o.eps, "Tradeoff parameter eps as p/q");
  approx->add_option("--mode", o.mode, "dense or sparse");

  CLI::App* adtv = app.add_subcommand("adtv", "Girth up to +1 via the 2k-hybrid");
  input(adtv);
  verify(adtv);

  CLI::App* gen = app.add_subcommand("gen", "Generate a random graph");
  seed(gen);
  gen->add_option("--model", o.model, "gnm, regular or chords")->required();
  gen->add_option("--n", o.n, "Vertex count");
  gen->add_option("--m", o.m, "Edge count (gnm)");
  gen->add_option("--degree", o.degree, "Degree (regular)");
  gen->add_option("--length", o.length, "Cycle length (chords)");
  gen->add_option("--chords", o.chords, "Chord count (chords)");
  gen->add_option("--output", o.output, "Write the edge list here instead of stdout");

  CLI::App* tradeoff = app.add_subcommand("tradeoff", "Time exponent and cycle bound per eps");
  tradeoff->add_option("--ell", o.ell, "Tradeoff parameter ell");
  tradeoff->add_option("--girth", o.girth, "Girth g");
  tradeoff->add_option("--mode", o.mode, "dense or sparse");
  tradeoff->add_flag("--csv", o.csv, "Emit CSV");

  CLI::App* bench = app.add_subcommand("bench", "Scaling of the 2k-hybrid on G(n, 2n)");
  seed(bench);
  bench->add_option("--k", o.k, "k for the 2k-hybrid (default 3)");
  bench->add_option("--trials", o.bench_trials, "Graphs per size");
  bench->add_option("--min-log", o.min_log, "Smallest n as a power of two");
  bench->add_option("--max-log", o.max_log, "Largest n as a power of two");
  bench->add_flag("--csv", o.csv, "Emit CSV");

  CLI::App* corpus = app.add_subcommand("verify-corpus", "Check every algorithm on a corpus");
  seed(corpus);
  hitting(corpus);
  corpus->add_option("--count", o.count, "Number of corpus graphs");
  corpus->add_option("--trials", o.corpus_trials, "Seeds per (k, alpha)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunReport report;
  report.command = join_args(args);
  const CLI::App* chosen = app.get_subcommands().front();
  if (chosen != exact && chosen != adtv && chosen != tradeoff) report.seed = o.seed;

  try {
    if (chosen == exact) return cmd_exact(o, report, out);
    if (chosen == hybrid) return cmd_hybrid(o, report, out);
    if (chosen == approx) return cmd_approx(o, report, out);
    if (chosen == adtv) return cmd_adtv(o, report, out);
    if (chosen == gen) return cmd_gen(o, report, out);
    if (chosen == tradeoff) return cmd_tradeoff(o, report, out);
    if (chosen == bench) return cmd_bench(o, report, out);
    return cmd_verify_corpus(o, report, out);
  } catch (const Error& e) {
    err << "girthkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "girthkit: internal error: " << e.what() << '\n';
    return kExitViolation;
  }
}

}  // namespace girthkit::cli
