#pragma once

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pancyclic/pancyclic.hpp"

namespace pancyclic::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kHypothesis = 2,
  kBudget = 3,
  kRandomness = 4,
  kVerifyFailed = 5,
};

// Generator options shared by every subcommand that reads a graph.
struct FamilyOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t p = 0;
  int k = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t num = 1;
  std::uint64_t den = 2;
  std::uint64_t seed = RandomSource::kDefaultSeed;
};

struct RunConfig {
  std::string subcommand;
  std::string which;  // oracle name or pipeline id
  std::string input;
  FamilyOptions fam;
  int k = 0;
  std::uint64_t seed = RandomSource::kDefaultSeed;
  std::optional<std::uint64_t> budget_nodes;
  std::optional<double> budget_seconds;
  std::string format = "text";
  std::string out;
  std::string trace_out;
  std::string hamilton;
  std::string hamilton_out;
  std::string report;
  std::size_t length = 0;
  std::size_t lo = 3;
  std::size_t hi = 0;
  bool meet_in_middle = false;
};

struct Generated {
  Graph graph;
  std::optional<std::size_t> alpha;
  std::optional<Cycle> hamilton;
};

inline Generated generate(const FamilyOptions& s) {
  const std::string& f = s.family;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw InputError(std::string("family ") + f + ": " + what);
  };
  if (f == "extremal") {
    auto g = generate_extremal(s.k);
    return {std::move(g), static_cast<std::size_t>(s.k), std::nullopt};
  }
  if (f == "powercomp") {
    need(s.n >= 3, "needs --n >= 3");
    need(s.n > 2 * s.p + 1, "needs n > 2p + 1");
    Generated out{generate_power_complement(s.n, s.p), s.p + 1, std::nullopt};
    if (std::gcd(s.n, s.p + 1) == 1) out.hamilton = known_hamilton_cycle_power_complement(s.n, s.p);
    return out;
  }
  if (f == "complete") {
    need(s.n >= 1, "needs --n >= 1");
    return {complete_graph(s.n), std::size_t{1}, std::nullopt};
  }
  if (f == "cycle") {
    need(s.n >= 3, "needs --n >= 3");
    return {cycle_graph(s.n), s.n / 2, std::nullopt};
  }
  if (f == "path") {
    need(s.n >= 1, "needs --n >= 1");
    return {path_graph(s.n), (s.n + 1) / 2, std::nullopt};
  }
  if (f == "bipartite") {
    need(s.a >= 1 && s.b >= 1, "needs --a and --b >= 1");
    return {complete_bipartite(s.a, s.b), std::max(s.a, s.b), std::nullopt};
  }
  if (f == "star") {
    need(s.n >= 1, "needs --n >= 1 leaves");
    return {star_graph(s.n), s.n, std::nullopt};
  }
  if (f == "petersen") return {petersen_graph(), std::size_t{4}, std::nullopt};
  if (f == "random") {
    need(s.den >= 1 && s.num <= s.den, "needs 0 <= num <= den, den >= 1");
    RandomSource rng(s.seed);
    return {random_graph(s.n, s.num, s.den, rng), std::nullopt, std::nullopt};
  }
  throw InputError("unknown family '" + f + "'");
}

// `with_k` registers --k as the extremal clique count; `run` uses --k for the
// promise instead and copies it into the family options.
inline void add_family_options(CLI::App* app, FamilyOptions& s, bool with_k) {
  app->add_option("--family", s.family,
                  "generator: extremal, powercomp, complete, cycle, path, bipartite, star, petersen, random");
  app->add_option("--n", s.n, "vertex count (leaf count for star)");
  app->add_option("--p", s.p, "powercomp: u~v iff cyclic distance > p");
  if (with_k) app->add_option("--k", s.k, "extremal: clique count");
  app->add_option("--a", s.a, "bipartite: left side");
  app->add_option("--b", s.b, "bipartite: right side");
  app->add_option("--num", s.num, "random: edge probability numerator");
  app->add_option("--den", s.den, "random: edge probability denominator");
  app->add_option("--gen-seed", s.seed, "random: generator seed");
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Certificate-producing pancyclicity pipelines, oracles and fixtures"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a fixture graph");
    add_family_options(gen, cfg_.fam, true);
    gen->add_option("--out", cfg_.out, "graph file (default: stdout)");
    gen->add_option("--hamilton-out", cfg_.hamilton_out, "write the family's known Hamilton cycle");

    auto* oracle = app.add_subcommand("oracle", "exact search on a small graph");
    oracle->add_option("which", cfg_.which, "alpha, kappa, cycle, hamilton or spectrum")
        ->required()
        ->check(CLI::IsMember({"alpha", "kappa", "cycle", "hamilton", "spectrum"}));
    add_input(oracle, true);
    add_budget(oracle);
    oracle->add_option("--length,-l", cfg_.length, "cycle: target length");
    oracle->add_option("--lo", cfg_.lo, "spectrum: first length");
    oracle->add_option("--hi", cfg_.hi, "spectrum: last length (default: n)");
    oracle->add_flag("--meet-in-middle", cfg_.meet_in_middle, "force the meet-in-the-middle cycle search");
    add_report_output(oracle);

    auto* run = app.add_subcommand("run", "run a pipeline and write its report and trace");
    run->add_option("theorem", cfg_.which, "short-cycles, pan-n or pan-mindeg")
        ->required()
        ->check(CLI::IsMember({"short-cycles", "pan-n", "pan-mindeg"}));
    add_input(run, false);
    run->add_option("--k", cfg_.k, "promised bound on the independence number")->required();
    run->add_option("--seed", cfg_.seed, "random seed")->capture_default_str();
    run->add_option("--hamilton", cfg_.hamilton, "Hamilton cycle file (pan-n, pan-mindeg)");
    run->add_option("--trace-out", cfg_.trace_out, "trace file");
    add_report_output(run);

    auto* verify = app.add_subcommand("verify", "re-check every certificate of a report");
    add_input(verify, true);
    verify->add_option("--report,-r", cfg_.report, "report file")->required();

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }
    cfg_.subcommand = app.get_subcommands().front()->get_name();

    try {
      if (gen->parsed()) return cmd_gen();
      if (oracle->parsed()) return cmd_oracle();
      if (run->parsed()) return cmd_run();
      return cmd_verify();
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << "\n";
      return kUsage;
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const HypothesisViolation& e) {
      err_ << "hypothesis violation at " << e.what() << "\n";
      if (!e.witness().empty()) err_ << "witness: " << detail::join_ids(e.witness()) << "\n";
      return kHypothesis;
    } catch (const PreconditionError& e) {
      err_ << "hypothesis rejected: " << e.what() << "\n";
      return kHypothesis;
    } catch (const RandomnessFailure& e) {
      err_ << "randomness failure: " << e.what() << "\n";
      return kRandomness;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

 private:
  void add_input(CLI::App* app, bool family_k) {
    app->add_option("--input,-i", cfg_.input, "graph file");
    add_family_options(app, cfg_.fam, family_k);
  }

  void add_budget(CLI::App* app) {
    app->add_option("--budget-nodes", cfg_.budget_nodes, "search node limit");
    app->add_option("--budget-seconds", cfg_.budget_seconds, "wall-clock limit");
  }

  void add_report_output(CLI::App* app) {
    app->add_option("--format", cfg_.format, "report format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app->add_option("--out", cfg_.out, "report file (default: stdout)");
  }

  // Summary lines go to stdout when the artifact has its own file.
  std::ostream& info() { return cfg_.out.empty() ? err_ : out_; }

  void emit(std::string_view content) {
    if (cfg_.out.empty())
      out_ << content;
    else
      write_file(cfg_.out, content);
  }

  Graph load_graph() {
    const bool file = !cfg_.input.empty();
    const bool family = !cfg_.fam.family.empty();
    if (file == family) throw InputError("give exactly one of --input or --family");
    if (file) return read_graph(read_file(cfg_.input));
    return generate(cfg_.fam).graph;
  }

  OracleBudget budget() const {
    OracleBudget b;
    if (cfg_.budget_nodes) b.node_limit = *cfg_.budget_nodes;
    b.seconds = cfg_.budget_seconds;
    return b;
  }

  ReportFormat format() const { return cfg_.format == "machine" ? ReportFormat::machine : ReportFormat::text; }

  int cmd_gen() {
    if (cfg_.fam.family.empty()) throw InputError("gen needs --family");
    auto gen = generate(cfg_.fam);
    const Graph& g = gen.graph;
    emit(write_graph(g));
    info() << "n " << g.order() << "\nm " << g.size() << "\nmin_degree " << g.min_degree() << "\nalpha "
           << (gen.alpha ? std::to_string(*gen.alpha) : "unknown") << "\n";
    if (!cfg_.hamilton_out.empty()) {
      if (!gen.hamilton) throw InputError("family " + cfg_.fam.family + " has no built-in Hamilton cycle");
      write_file(cfg_.hamilton_out, write_cycle(*gen.hamilton));
    }
    return kOk;
  }

  int cmd_oracle() {
    Graph g = load_graph();
    const auto& w = cfg_.which;
    if (w == "alpha") {
      auto r = independence_number(g, budget());
      if (!r.exact()) {
        out_ << "aborted after " << r.nodes << " nodes: " << r.value << " <= alpha <= " << r.upper_bound << "\n";
        return kBudget;
      }
      out_ << r.value << "\n";
      out_ << "witness: " << detail::join_ids(r.witness) << "\n";
      return kOk;
    }
    if (w == "kappa") {
      out_ << vertex_connectivity(g) << "\n";
      return kOk;
    }
    CycleSearchOptions opts;
    opts.force_meet_in_middle = cfg_.meet_in_middle;
    if (w == "cycle" || w == "hamilton") {
      CycleSearchResult r;
      if (w == "hamilton") {
        r = find_hamilton_cycle(g, budget());
      } else {
        if (cfg_.length < 3) throw InputError("oracle cycle needs --length >= 3");
        r = find_cycle_of_length(g, cfg_.length, budget(), opts);
      }
      switch (r.status) {
        case SearchStatus::found:
          out_ << "found: " << detail::join_ids(r.cycle->verts) << "\n";
          return kOk;
        case SearchStatus::absent:
          out_ << "absent (search complete, " << r.nodes << " nodes)\n";
          return kOk;
        case SearchStatus::aborted:
          out_ << "aborted after " << r.nodes << " nodes\n";
          return kBudget;
      }
    }
    const std::size_t hi = cfg_.hi == 0 ? g.order() : cfg_.hi;
    auto rep = cycle_spectrum(g, cfg_.lo, hi, budget(), opts);
    emit(write_report(rep, format()));
    info() << "found " << rep.certificates.size() << ", absent " << rep.absent.size() << ", aborted "
           << rep.aborted.size() << "\n";
    return rep.aborted.empty() ? kOk : kBudget;
  }

  int cmd_run() {
    cfg_.fam.k = cfg_.k;
    Graph g = load_graph();
    info() << "version " << kVersion << "\nseed " << cfg_.seed << "\n";
    RandomSource rng(cfg_.seed);
    PipelineResult res;
    if (cfg_.which == "short-cycles") {
      res = short_cycle_spectrum(g, cfg_.k, rng);
    } else {
      if (cfg_.hamilton.empty()) throw InputError(cfg_.which + " needs --hamilton");
      Cycle c = read_cycle(read_file(cfg_.hamilton));
      res = cfg_.which == "pan-n" ? pancyclic_large_n(g, c, cfg_.k, rng) : pancyclic_min_degree(g, c, cfg_.k, rng);
    }
    emit(write_report(res.report, format()));
    if (!cfg_.trace_out.empty()) write_file(cfg_.trace_out, res.trace.dump());

    auto gaps = res.report.gaps();
    auto bad = check_report(g, res.report);
    info() << "certified " << res.report.certificates.size() << " of [" << res.report.lo << ", " << res.report.hi
           << "]\n";
    if (!gaps.empty()) err_ << "gaps: " << join_gaps(gaps) << "\n";
    for (const auto& [len, why] : bad) err_ << "length " << len << " failed: " << why << "\n";
    return gaps.empty() && bad.empty() ? kOk : kVerifyFailed;
  }

  int cmd_verify() {
    Graph g = load_graph();
    auto rep = read_report(read_file(cfg_.report));
    bool ok = true;
    if (rep.graph_hash != graph_hash(g)) {
      out_ << "graph hash mismatch: report " << rep.graph_hash << ", graph " << graph_hash(g) << "\n";
      ok = false;
    }
    auto bad = check_report(g, rep);
    std::size_t b = 0;
    for (const auto& [len, cert] : rep.certificates) {
      if (b < bad.size() && bad[b].first == len) {
        out_ << "length " << len << ": FAIL " << bad[b++].second << "\n";
        ok = false;
      } else {
        out_ << "length " << len << ": pass\n";
      }
    }
    return ok ? kOk : kVerifyFailed;
  }

  static std::string join_gaps(const std::vector<std::size_t>& gaps) {
    std::string s;
    for (std::size_t i = 0; i < gaps.size(); ++i) s += (i ? " " : "") + std::to_string(gaps[i]);
    return s;
  }

  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;
};

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(std::move(args));
}

}  // namespace pancyclic::cli
