#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>

#include "CLI11.hpp"
#include "umc/bench.hpp"
#include "umc/clique_io.hpp"
#include "umc/enumerate.hpp"
#include "umc/generators.hpp"
#include "umc/graph_io.hpp"
#include "umc/oracle.hpp"

namespace umc::cli {
namespace {

/// Bad flags or input files; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("UMC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("UMC_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw UsageError("--alpha must lie in (0,1], got " + format_probability(alpha));
  }
}

ProbModel parse_prob_model(const std::string& name) {
  if (name == "direct") return ProbModel::direct;
  if (name == "coauthor") return ProbModel::coauthor;
  throw UsageError("--prob-model must be direct or coauthor");
}

/// Output file when a path is given, else the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct EnumerateArgs {
  std::string input, out, algo = "mule", prob_model = "direct";
  double alpha = 0.0;
  std::size_t min_size = 1;
  bool canonical = false;
  bool check_invariants = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  require_alpha(a.alpha);
  EnumConfig config;
  config.alpha = a.alpha;
  config.min_size = a.min_size;
  config.emit_order = a.canonical ? EmitOrder::canonical : EmitOrder::dfs;
  config.search.check_invariants = a.check_invariants;
  try {
    config.algorithm = parse_algorithm(a.algo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (config.min_size < 1) throw UsageError("--min-size must be >= 1");

  UncertainGraph g = load_graph_file(a.input, parse_prob_model(a.prob_model));
  Sink sink(a.out, out);
  auto start = std::chrono::steady_clock::now();
  EnumStats stats = enumerate(g, config, [&](CliqueView c) {
    write_clique(sink.stream(), g, c);
  });
  std::chrono::duration<double, std::milli> took =
      std::chrono::steady_clock::now() - start;
  sink.stream().flush();

  err << "cliques: " << stats.count << "  vertices: " << stats.out_vertices
      << "  depth: " << stats.max_depth << "  ms: " << took.count() << '\n';
  if (a.check_invariants) {
    err << "invariant checks: " << stats.invariant_checks
        << "  violations: " << stats.invariant_violations << '\n';
    if (stats.invariant_violations) return kExitVerifyFailed;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string input, cliques, prob_model = "direct";
  double alpha = 0.0;
  bool complete = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  require_alpha(a.alpha);
  UncertainGraph g = load_graph_file(a.input, parse_prob_model(a.prob_model));
  if (a.complete && g.num_vertices() > kOracleMaxVertices) {
    throw UsageError("--complete needs at most " +
                     std::to_string(kOracleMaxVertices) + " vertices");
  }
  std::ifstream in(a.cliques);
  if (!in) throw UsageError("cannot open " + a.cliques);
  auto listed = read_cliques(in, g);

  std::size_t violations = 0;
  auto report = [&](const std::string& what) {
    ++violations;
    out << what << '\n';
  };

  std::set<std::vector<Vertex>> seen;
  for (const auto& c : listed) {
    const std::string where = " (line " + std::to_string(c.line) + ")";
    const std::string set = describe(g, c.vertices);
    if (!seen.insert(c.vertices).second) {
      report("duplicate: " + set + where);
      continue;
    }
    auto q = clique_probability(g, c.vertices);
    if (!q) {
      report("not a clique: " + set + where);
      continue;
    }
    if (!(*q >= a.alpha)) {
      report("below alpha: " + set + " has probability " +
             format_probability(*q) + where);
      continue;
    }
    if (!is_alpha_maximal(g, c.vertices, a.alpha)) {
      report("not maximal: " + set + where);
    }
    if (std::abs(c.stated_probability - *q) > kFactorTolerance * *q) {
      report("probability mismatch: " + set + " listed " +
             format_probability(c.stated_probability) + ", actual " +
             format_probability(*q) + where);
    }
  }

  if (a.complete) {
    auto oracle = brute_force_enumerate(g, a.alpha);
    std::set<std::vector<Vertex>> expected;
    for (const auto& c : oracle.cliques) {
      expected.insert(c.vertices);
      if (!seen.count(c.vertices)) report("missing: " + describe(g, c.vertices));
    }
    for (const auto& c : seen) {
      if (!expected.count(c)) report("extra: " + describe(g, c));
    }
  }

  err << "checked " << listed.size() << " cliques, " << violations
      << " violation(s)\n";
  return violations ? kExitVerifyFailed : kExitOk;
}

struct BenchArgs {
  std::vector<std::string> inputs, gens, algos{"mule"};
  std::vector<double> alphas;
  std::vector<std::size_t> min_sizes{1};
  std::string csv, prob_model = "direct";
  std::int64_t seed = -1;
  int repeat = 1;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.inputs.empty() && a.gens.empty()) {
    throw UsageError("bench needs --input or --gen");
  }
  for (double alpha : a.alphas) require_alpha(alpha);
  std::vector<Algorithm> algos;
  for (const auto& name : a.algos) {
    try {
      algos.push_back(parse_algorithm(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  for (auto t : a.min_sizes) {
    if (t < 1) throw UsageError("--min-sizes entries must be >= 1");
  }
  const std::uint64_t seed =
      a.seed >= 0 ? static_cast<std::uint64_t>(a.seed) : default_seed();

  std::vector<std::pair<std::string, UncertainGraph>> graphs;
  for (const auto& path : a.inputs) {
    graphs.emplace_back(path, load_graph_file(path, parse_prob_model(a.prob_model)));
  }
  for (const auto& text : a.gens) {
    GenSpec spec;
    try {
      spec = parse_gen_spec(text, seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--gen: ") + e.what());
    }
    graphs.emplace_back(spec.label(), generate(spec));
  }

  Sink sink(a.csv, out);
  CsvWriter csv(sink.stream());
  for (const auto& [label, g] : graphs) {
    for (Algorithm algo : algos) {
      for (double alpha : a.alphas) {
        for (std::size_t t : a.min_sizes) {
          auto r = run_bench_cell(g, label, algo, alpha, t, seed, a.repeat);
          csv.write(r);
          err << label << ' ' << to_string(algo) << " alpha=" << alpha
              << " t=" << t << ": " << r.count << " cliques, " << r.ms
              << " ms\n";
        }
      }
    }
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string family, out, probs = "uniform", input;
  std::size_t n = 0, m = 10;
  double density = 0.5, alpha = 0.5;
  std::int64_t seed = -1;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream&) {
  const std::uint64_t seed =
      a.seed >= 0 ? static_cast<std::uint64_t>(a.seed) : default_seed();

  UncertainGraph g;
  if (a.family == "from-edges") {
    if (a.input.empty()) throw UsageError("--family from-edges needs --input");
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot open " + a.input);
    auto det = load_deterministic(in);
    if (a.probs == "uniform") {
      g = assign_uniform_probabilities(det, seed);
    } else {
      double q = std::stod(a.probs);
      if (!(q > 0.0 && q <= 1.0)) throw UsageError("--p must lie in (0,1]");
      g = assign_constant_probability(det, q);
    }
  } else {
    std::string text = a.family + ":n=" + std::to_string(a.n);
    if (a.family == "ba") text += ",m=" + std::to_string(a.m);
    if (a.family == "er") text += ",density=" + format_probability(a.density);
    if (a.family == "extremal") text += ",alpha=" + format_probability(a.alpha);
    if (a.family != "extremal") text += ",p=" + a.probs;
    try {
      g = generate(parse_gen_spec(text, seed));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Sink sink(a.out, out);
  write_graph(sink.stream(), g);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Enumerate alpha-maximal cliques of uncertain graphs"};
  app.name("umc");
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Stream every alpha-maximal clique");
  en->add_option("--input", ea.input, "Edge-list file")->required();
  en->add_option("--alpha", ea.alpha, "Probability threshold in (0,1]")->required();
  en->add_option("--algo", ea.algo, "mule | large-mule | dfs-noip | oracle");
  en->add_option("--min-size", ea.min_size, "Only cliques with at least T vertices");
  en->add_flag("--canonical", ea.canonical, "Sort output lexicographically");
  en->add_option("--out", ea.out, "Output file (default stdout)");
  en->add_option("--prob-model", ea.prob_model, "direct | coauthor");
  en->add_flag("--check-invariants", ea.check_invariants,
               "Recompute cached factors at every frame");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Check a clique file against a graph");
  ve->add_option("--input", va.input, "Edge-list file")->required();
  ve->add_option("--cliques", va.cliques, "Clique stream to check")->required();
  ve->add_option("--alpha", va.alpha, "Probability threshold in (0,1]")->required();
  ve->add_flag("--complete", va.complete,
               "Also compare against the brute-force oracle (n <= 25)");
  ve->add_option("--prob-model", va.prob_model, "direct | coauthor");

  BenchArgs ba;
  auto* be = app.add_subcommand("bench", "Measure runtime over a parameter sweep");
  be->add_option("--input", ba.inputs, "Edge-list file (repeatable)");
  be->add_option("--gen", ba.gens, "Generator spec, e.g. ba:n=2000,m=10 (repeatable)");
  be->add_option("--alphas", ba.alphas, "Comma-separated thresholds")
      ->required()
      ->delimiter(',');
  be->add_option("--algos", ba.algos, "Comma-separated algorithms")->delimiter(',');
  be->add_option("--min-sizes", ba.min_sizes, "Comma-separated size thresholds")
      ->delimiter(',');
  be->add_option("--csv", ba.csv, "CSV output file ('-' for stdout)")->required();
  be->add_option("--seed", ba.seed, "Generator seed (default $UMC_SEED or 1)");
  be->add_option("--repeat", ba.repeat, "Runs per cell; the fastest is kept");
  be->add_option("--prob-model", ba.prob_model, "direct | coauthor");

  GenerateArgs ga;
  auto* ge = app.add_subcommand("generate", "Write a synthetic uncertain graph");
  ge->add_option("--family", ga.family, "ba | er | extremal | from-edges")
      ->required()
      ->check(CLI::IsMember({"ba", "er", "extremal", "from-edges"}));
  ge->add_option("--n", ga.n, "Vertex count");
  ge->add_option("--m", ga.m, "Edges per new vertex (ba)");
  ge->add_option("--density", ga.density, "Edge probability (er)");
  ge->add_option("--alpha", ga.alpha, "Threshold the construction targets (extremal)");
  ge->add_option("--p", ga.probs, "'uniform' or a constant probability");
  ge->add_option("--input", ga.input, "Unweighted edge list (from-edges)");
  ge->add_option("--seed", ga.seed, "Seed (default $UMC_SEED or 1)");
  ge->add_option("--out", ga.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*en) return cmd_enumerate(ea, out, err);
    if (*ve) return cmd_verify(va, out, err);
    if (*be) return cmd_bench(ba, out, err);
    if (*ge) return cmd_generate(ga, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace umc::cli
