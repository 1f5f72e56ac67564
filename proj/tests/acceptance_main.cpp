// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every tolerance and seed used below is fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "umc/bench.hpp"
#include "umc/enumerate.hpp"
#include "umc/generators.hpp"
#include "umc/oracle.hpp"
#include "umc/rng.hpp"
#include "test_util.hpp"

namespace {

using namespace umc;

constexpr double kRelTolerance = 1e-9;
constexpr std::size_t kSeedsPerCell = 4;
constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kMcCliques = 20;
constexpr std::size_t kMcSamples = 100000;
constexpr double kMcStandardErrors = 4.0;
constexpr int kTimingRepeats = 5;
constexpr double kOutputSensitivityRatio = 10.0;

struct Instance {
  std::size_t n;
  double density;
  double alpha;
  std::uint64_t seed;
  UncertainGraph g;  // pruned at alpha
};

std::vector<Instance> build_corpus() {
  std::vector<Instance> corpus;
  std::uint64_t k = 0;
  for (std::size_t n = 6; n <= 12; ++n) {
    for (double density : {0.3, 0.5, 0.8}) {
      for (double alpha : {0.2, 0.5, 0.8}) {
        for (std::size_t s = 0; s < kSeedsPerCell; ++s, ++k) {
          const std::uint64_t seed = Rng(kCorpusSeed).derive(k);
          auto raw = assign_uniform_probabilities(gen_erdos_renyi(n, density, seed),
                                                  Rng(seed).derive(1));
          corpus.push_back({n, density, alpha, seed, prune_by_alpha(raw, alpha)});
        }
      }
    }
  }
  return corpus;
}

std::string where(const Instance& in) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "n=%zu density=%g alpha=%g seed=%llu", in.n, in.density,
                in.alpha, static_cast<unsigned long long>(in.seed));
  return buf;
}

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool same_sets(const std::vector<Clique>& a, const std::vector<Clique>& b) {
  return testing::vertex_sets(a) == testing::vertex_sets(b);
}

std::vector<Clique> at_least(const std::vector<Clique>& all, std::size_t t) {
  std::vector<Clique> out;
  for (const auto& c : all) {
    if (c.vertices.size() >= t) out.push_back(c);
  }
  return out;
}

double ms_min(const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < kTimingRepeats; ++r) {
    auto start = std::chrono::steady_clock::now();
    fn();
    std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

std::uint64_t count_mule(const UncertainGraph& g, double alpha) {
  std::uint64_t n = 0;
  mule(g, alpha, [&](CliqueView) { ++n; });
  return n;
}

std::uint64_t count_noip(const UncertainGraph& g, double alpha) {
  std::uint64_t n = 0;
  dfs_noip(g, alpha, [&](CliqueView) { ++n; });
  return n;
}

// Criteria 1, 3, 4, 5 and 6 share one pass over the corpus.
void check_corpus(const std::vector<Instance>& corpus, Criterion& c1, Criterion& c3,
                  Criterion& c4, Criterion& c5, Criterion& c6) {
  std::uint64_t checks = 0, violations = 0;
  for (const auto& in : corpus) {
    SearchOptions opts;
    opts.check_invariants = true;
    EnumStats stats;
    auto got = testing::run_mule(in.g, in.alpha, opts, &stats);
    opts.recursion = Recursion::explicit_stack;
    EnumStats stacked;
    auto again = testing::run_mule(in.g, in.alpha, opts, &stacked);
    checks += stats.invariant_checks + stacked.invariant_checks;
    violations += stats.invariant_violations + stacked.invariant_violations;
    if (stats.invariant_violations + stacked.invariant_violations) {
      c6.fail("violation at " + where(in));
    }
    if (!same_sets(got, again)) c6.fail("stack/native mismatch at " + where(in));

    auto oracle = brute_force_enumerate(in.g, in.alpha).cliques;
    auto map = testing::to_map(got);
    if (map.size() != got.size()) c1.fail("duplicate output at " + where(in));
    if (!same_sets(got, oracle)) {
      c1.fail("set mismatch at " + where(in));
    } else {
      for (const auto& c : oracle) {
        if (std::abs(map[c.vertices] - c.probability) > kRelTolerance * c.probability) {
          c1.fail("probability mismatch at " + where(in));
        }
      }
    }

    if (got.size() > max_clique_count_bound(in.n)) c3.fail("bound exceeded at " + where(in));

    for (std::size_t t = 2; t <= 5; ++t) {
      auto expected = at_least(got, t);
      if (!same_sets(testing::run_large_mule(in.g, in.alpha, t), expected)) {
        c4.fail("large_mule t=" + std::to_string(t) + " at " + where(in));
      }
      auto filtered = shared_neighborhood_filter(in.g, t);
      if (!same_sets(at_least(testing::run_mule(filtered, in.alpha), t), expected)) {
        c4.fail("filtered mule t=" + std::to_string(t) + " at " + where(in));
      }
    }

    if (!same_sets(testing::run_dfs_noip(in.g, in.alpha), got)) {
      c5.fail("dfs_noip mismatch at " + where(in));
    }
  }
  const std::string span = std::to_string(corpus.size()) + " instances";
  if (c1.pass) c1.detail = span + ", sets exact, probabilities within 1e-9 relative";
  if (c3.pass) c3.detail = span + ", count <= C(n, n/2) everywhere";
  if (c4.pass) c4.detail = span + " x t in {2,3,4,5}, with and without the filter";
  if (c5.pass) c5.detail = span + ", identical clique sets";
  if (checks == 0) c6.fail("no invariant checks ran");
  if (c6.pass) {
    c6.detail = std::to_string(checks) + " frame checks, " + std::to_string(violations) +
                " violations, native and explicit stack";
  }
}

void check_extremal(Criterion& c) {
  const std::uint64_t expected[] = {6, 20, 70, 252, 924};
  std::size_t runs = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t n = 4 + 2 * i;
    for (double alpha : {0.3, 0.5, 0.9}) {
      auto g = build_extremal_graph(n, alpha);
      std::uint64_t count = 0;
      bool sizes_ok = true;
      mule(g, alpha, [&](CliqueView v) {
        ++count;
        sizes_ok &= v.vertices.size() == n / 2;
      });
      ++runs;
      if (count != expected[i] || count != max_clique_count_bound(n) || !sizes_ok) {
        c.fail("n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + " gave " +
               std::to_string(count));
      }
    }
  }
  if (c.pass) c.detail = std::to_string(runs) + " graphs, counts 6/20/70/252/924, sizes n/2";
}

// Picks kMcCliques cliques with 0 < p < 1 spread across the corpus.
std::vector<std::pair<const Instance*, Clique>> sample_cliques(
    const std::vector<Instance>& corpus) {
  std::vector<std::pair<const Instance*, Clique>> pool;
  for (const auto& in : corpus) {
    for (auto& c : testing::run_mule(in.g, in.alpha)) {
      if (c.probability < 1.0) pool.emplace_back(&in, std::move(c));
    }
  }
  std::vector<std::pair<const Instance*, Clique>> picked;
  const std::size_t stride = std::max<std::size_t>(1, pool.size() / kMcCliques);
  for (std::size_t i = 0; i < pool.size() && picked.size() < kMcCliques; i += stride) {
    picked.push_back(pool[i]);
  }
  return picked;
}

bool monte_carlo_round(const std::vector<std::pair<const Instance*, Clique>>& picked,
                       std::uint64_t seed, std::string& worst) {
  bool ok = true;
  double worst_z = 0.0;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    const auto& [in, c] = picked[i];
    const double exact = *clique_probability(in->g, c.vertices);
    auto est = estimate_clique_probability(in->g, c.vertices, kMcSamples,
                                           Rng(seed).derive(i));
    const double se = std::sqrt(exact * (1.0 - exact) / kMcSamples);
    const double z = std::abs(est.estimate - exact) / se;
    worst_z = std::max(worst_z, z);
    if (z > kMcStandardErrors) ok = false;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |z| = %.2f", worst_z);
  worst = buf;
  return ok;
}

void check_monte_carlo(const std::vector<Instance>& corpus, Criterion& c) {
  auto picked = sample_cliques(corpus);
  if (picked.size() < kMcCliques) {
    c.fail("only " + std::to_string(picked.size()) + " cliques with p < 1");
    return;
  }
  std::string worst;
  if (monte_carlo_round(picked, 7001, worst)) {
    c.detail = std::to_string(picked.size()) + " cliques, 1e5 samples, " + worst;
    return;
  }
  const std::string first = worst;
  if (monte_carlo_round(picked, 7002, worst)) {
    c.detail = "first seed " + first + "; rerun " + worst;
  } else {
    c.fail("both seeds exceed 4 SE: " + first + ", " + worst);
  }
}

void check_performance(Criterion& c) {
  auto ba = [](std::size_t n) {
    GenSpec spec;
    spec.family = Family::barabasi_albert;
    spec.n = n;
    spec.m = 10;
    spec.seed = 1;
    return generate(spec);
  };
  auto g2000 = ba(2000);
  std::ostringstream detail;

  // (a)
  auto low = prune_by_alpha(g2000, 0.001);
  const double t_mule = ms_min([&] { count_mule(low, 0.001); });
  const double t_noip = ms_min([&] { count_noip(low, 0.001); });
  if (!(t_mule < t_noip)) c.fail("mule not faster than dfs_noip at alpha=0.001");
  char buf[160];
  std::snprintf(buf, sizeof buf, "(a) mule %.1f ms < dfs_noip %.1f ms; ", t_mule, t_noip);
  detail << buf;

  // (b)
  double prev_ms = 1e300;
  std::uint64_t prev_count = UINT64_MAX;
  detail << "(b)";
  for (double alpha : {0.001, 0.01, 0.1, 0.5, 0.9}) {
    auto g = prune_by_alpha(g2000, alpha);
    std::uint64_t count = 0;
    const double ms = ms_min([&] { count = count_mule(g, alpha); });
    std::snprintf(buf, sizeof buf, " %g:%llu/%.1fms", alpha,
                  static_cast<unsigned long long>(count), ms);
    detail << buf;
    if (count > prev_count) c.fail("count rises at alpha=" + std::to_string(alpha));
    if (ms > prev_ms) c.fail("runtime rises at alpha=" + std::to_string(alpha));
    prev_ms = ms;
    prev_count = count;
  }

  // (c)
  double lo = 1e300, hi = 0.0;
  for (std::size_t n : {1000, 2000, 5000}) {
    auto g = prune_by_alpha(ba(n), 0.5);
    std::uint64_t count = 0;
    const double ms = ms_min([&] { count = count_mule(g, 0.5); });
    const double per = ms / static_cast<double>(std::max<std::uint64_t>(count, 1));
    lo = std::min(lo, per);
    hi = std::max(hi, per);
  }
  std::snprintf(buf, sizeof buf, "; (c) ms/clique spread %.2fx", hi / lo);
  detail << buf;
  if (!(hi / lo < kOutputSensitivityRatio)) c.fail("ms/clique varies by >= 10x");

  if (c.pass) {
    c.detail = detail.str();
  } else {
    c.detail += " [" + detail.str() + "]";
  }
}

int cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

void check_cli(Criterion& c) {
  testing::TempDir dir;
  const auto graph = dir.file("g.txt"), cliques = dir.file("c.txt"), bad = dir.file("bad.txt");
  if (cli({"generate", "--family", "er", "--n", "12", "--density", "0.6", "--seed", "12",
           "--out", graph}) != 0) {
    return c.fail("generate failed");
  }
  if (cli({"enumerate", "--input", graph, "--alpha", "0.3", "--out", cliques}) != 0) {
    return c.fail("enumerate failed");
  }
  const int ok = cli({"verify", "--input", graph, "--cliques", cliques, "--alpha", "0.3",
                      "--complete"});
  if (ok != cli::kExitOk) return c.fail("verify --complete exited " + std::to_string(ok));

  // Drop the last vertex of the first clique with two or more vertices.
  std::ifstream in(cliques);
  std::ofstream corrupt(bad);
  std::string line;
  bool dropped = false;
  while (std::getline(in, line)) {
    if (!dropped && std::count(line.begin(), line.end(), ' ') >= 2) {
      line.erase(line.rfind(' '));
      dropped = true;
    }
    corrupt << line << '\n';
  }
  corrupt.close();
  if (!dropped) return c.fail("no clique with two vertices to corrupt");
  const int rejected = cli({"verify", "--input", graph, "--cliques", bad, "--alpha", "0.3",
                            "--complete"});
  if (rejected != cli::kExitVerifyFailed) {
    return c.fail("corrupted file exited " + std::to_string(rejected));
  }
  c.detail = "clean file exits 0, file with one vertex dropped exits 1";
}

}  // namespace

int main() {
  std::vector<Criterion> all;
  for (auto [id, name] : std::vector<std::pair<int, std::string>>{
           {1, "oracle equivalence"},
           {2, "extremal count"},
           {3, "upper bound"},
           {4, "large-mule filter equivalence"},
           {5, "baseline equivalence"},
           {6, "incremental probability integrity"},
           {7, "monte carlo consistency"},
           {8, "performance trends"},
           {9, "cli round trip"}}) {
    all.push_back({id, name, true, {}});
  }

  auto start = std::chrono::steady_clock::now();
  try {
    auto corpus = build_corpus();
    check_corpus(corpus, all[0], all[2], all[3], all[4], all[5]);
    check_extremal(all[1]);
    check_monte_carlo(corpus, all[6]);
    check_performance(all[7]);
    check_cli(all[8]);
  } catch (const std::exception& e) {
    std::printf("error: %s\n", e.what());
    return 1;
  }

  int failures = 0;
  for (const auto& c : all) {
    std::printf("%s  [%d] %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.detail.c_str());
    failures += !c.pass;
  }
  std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(all.size()) - failures,
              all.size(), took.count());
  return failures ? 1 : 0;
}
