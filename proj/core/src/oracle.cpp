#include "umc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "umc/rng.hpp"

namespace umc {

OracleResult brute_force_enumerate(const UncertainGraph& g, double alpha) {
  check_alpha(alpha);
  const std::size_t n = g.num_vertices();
  if (n > kOracleMaxVertices) {
    throw std::invalid_argument("brute-force oracle is limited to " +
                                std::to_string(kOracleMaxVertices) +
                                " vertices, got " + std::to_string(n));
  }
  auto start = std::chrono::steady_clock::now();
  OracleResult result;
  if (n == 0) return result;

  const std::uint32_t full = (std::uint32_t{1} << n);
  std::vector<Vertex> members;
  auto unpack = [&](std::uint32_t set) {
    members.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (set >> v & 1U) members.push_back(v);
    }
  };

  // is_clique[S]: S is an alpha-clique. A set whose largest-vertex-removed
  // subset fails cannot pass, so most sets skip the product.
  std::vector<std::uint8_t> is_clique(full, 0);
  is_clique[0] = 1;
  for (std::uint32_t set = 1; set < full; ++set) {
    std::uint32_t top = std::uint32_t{1} << (31 - std::countl_zero(set));
    if (!is_clique[set ^ top]) continue;
    unpack(set);
    auto q = clique_probability(g, members);
    is_clique[set] = q && *q >= alpha;
  }

  for (std::uint32_t set = 1; set < full; ++set) {
    if (!is_clique[set]) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      std::uint32_t bit = std::uint32_t{1} << v;
      if (!(set & bit) && is_clique[set | bit]) maximal = false;
    }
    if (!maximal) continue;
    unpack(set);
    result.cliques.emplace_back(members, *clique_probability(g, members));
  }
  std::sort(result.cliques.begin(), result.cliques.end(),
            [](const Clique& a, const Clique& b) { return a.vertices < b.vertices; });
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::uint64_t max_clique_count_bound(std::size_t n) {
  if (n < 2) throw std::invalid_argument("max_clique_count_bound needs n >= 2");
  const std::size_t k = n / 2;
  // C(n-k+i, i) after step i; each intermediate is an exact binomial.
  __extension__ using Wide = unsigned __int128;
  Wide c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("C(" + std::to_string(n) + "," +
                                std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

UncertainGraph build_extremal_graph(std::size_t n, double alpha) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("extremal graph needs even n >= 4");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("extremal graph needs 0 < alpha < 1");
  }
  const std::size_t half = n / 2;
  const std::size_t kappa = half * (half - 1) / 2;
  const double unit = std::numeric_limits<double>::epsilon() / 2;

  auto power = [kappa](double q) {
    double prod = 1.0;
    for (std::size_t i = 0; i < kappa; ++i) prod *= q;
    return prod;
  };
  // Any association of kappa factors is within kappa-1 rounding errors of the
  // exact product; the 4*(kappa-1) margin covers that plus this loop's own
  // error. With kappa = 1 there is no rounding and q = alpha exactly.
  const double target =
      alpha * (1.0 + 4.0 * static_cast<double>(kappa - 1) * unit);
  double q = std::pow(alpha, 1.0 / static_cast<double>(kappa));
  while (power(q) < target) q = std::nextafter(q, 2.0);

  std::vector<WeightedEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, q});
  }
  return UncertainGraph(n, edges);
}

MonteCarloEstimate estimate_clique_probability(const UncertainGraph& g,
                                               std::span<const Vertex> c,
                                               std::size_t samples,
                                               std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::vector<double> probs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      auto p = g.edge_probability(c[i], c[j]);
      if (!p) throw std::invalid_argument("vertex set is not a clique");
      probs.push_back(*p);
    }
  }

  Rng rng(seed);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    bool present = true;
    for (double p : probs) {
      if (!rng.bernoulli(p)) {
        present = false;
        break;
      }
    }
    hits += present;
  }
  MonteCarloEstimate out;
  const auto total = static_cast<double>(samples);
  out.estimate = static_cast<double>(hits) / total;
  out.stddev = std::sqrt(out.estimate * (1.0 - out.estimate) / total);
  return out;
}

}  // namespace umc
