#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "umc/enumerate.hpp"
#include "umc/graph.hpp"

namespace umc {

inline constexpr std::size_t kOracleMaxVertices = 25;

struct OracleResult {
  /// Sorted lexicographically by internal vertex lists.
  std::vector<Clique> cliques;
  std::chrono::nanoseconds elapsed{0};
};

/// Definitional reference: tests every vertex subset for being an
/// alpha-clique and keeps those no single vertex extends. Refuses graphs
/// with more than kOracleMaxVertices vertices.
OracleResult brute_force_enumerate(const UncertainGraph& g, double alpha);

/// C(n, floor(n/2)), the largest possible number of alpha-maximal cliques
/// for 0 < alpha < 1. Throws std::overflow_error beyond 64 bits.
std::uint64_t max_clique_count_bound(std::size_t n);

/// Complete graph on an even n >= 4 whose alpha-maximal cliques are exactly
/// the n/2-subsets: every edge gets q with q^kappa = alpha,
/// kappa = C(n/2, 2). q is raised by whole ulps until q^kappa clears alpha
/// with margin for any multiplication order.
UncertainGraph build_extremal_graph(std::size_t n, double alpha);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stddev = 0.0;  // standard error of `estimate`
};

/// Fraction of sampled possible worlds containing every edge of `c`.
MonteCarloEstimate estimate_clique_probability(const UncertainGraph& g,
                                               std::span<const Vertex> c,
                                               std::size_t samples,
                                               std::uint64_t seed);

}  // namespace umc
