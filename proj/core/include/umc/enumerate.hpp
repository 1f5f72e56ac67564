#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "umc/graph.hpp"

namespace umc {

/// A vertex with the factor by which adding it multiplies the probability of
/// the current clique.
struct Candidate {
  Vertex vertex;
  double factor;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Candidates above max(C), sorted by vertex: q * factor = clq(C + u) >= alpha.
using ExtensionSet = std::vector<Candidate>;
/// Candidates below max(C) not in C, sorted by vertex:
/// q * factor = clq(C + v) >= alpha. Nonempty means C is not maximal.
using ExclusionSet = std::vector<Candidate>;

/// Emitted clique. `vertices` is sorted by internal index and only valid
/// during the sink call.
struct CliqueView {
  std::span<const Vertex> vertices;
  double probability;
};

struct Clique {
  std::vector<Vertex> vertices;
  double probability = 1.0;

  Clique() = default;
  Clique(std::vector<Vertex> v, double p) : vertices(std::move(v)), probability(p) {}
  explicit Clique(CliqueView view)
      : vertices(view.vertices.begin(), view.vertices.end()),
        probability(view.probability) {}
};

using CliqueSink = std::function<void(CliqueView)>;

enum class Algorithm { mule, large_mule, dfs_noip, oracle };
enum class EmitOrder { dfs, canonical };
enum class Recursion { automatic, native, explicit_stack };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

struct SearchOptions {
  Recursion recursion = Recursion::automatic;
  /// Recompute clq(C + u) from scratch at every frame and compare against
  /// the cached factors (relative tolerance 1e-9). Slow; for verification.
  bool check_invariants = false;
};

struct EnumStats {
  std::uint64_t count = 0;
  std::uint64_t out_vertices = 0;
  std::size_t max_depth = 0;
  std::uint64_t frames = 0;
  std::uint64_t invariant_checks = 0;
  std::uint64_t invariant_violations = 0;
};

/// Relative tolerance used by the invariant checker.
inline constexpr double kFactorTolerance = 1e-9;

/// Native recursion is used while the deepest possible frame (max degree + 1)
/// stays below this; deeper inputs switch to the explicit frame stack.
inline constexpr std::size_t kNativeDepthLimit = 4096;

/// Extension set of C' = C + m built from the parent set `parent`: keeps
/// (u, r * p(u,m)) for u > m, u adjacent to m, q_new * r * p(u,m) >= alpha.
/// `out` is overwritten.
void generate_extension(const UncertainGraph& g, Vertex m, double q_new,
                        std::span<const Candidate> parent, double alpha,
                        ExtensionSet& out);
ExtensionSet generate_extension(const UncertainGraph& g, Vertex m,
                                double q_new, std::span<const Candidate> parent,
                                double alpha);

/// Exclusion set of C' = C + m: keeps (v, s * p(v,m)) for v adjacent to m
/// with q_new * s * p(v,m) >= alpha.
void generate_exclusion(const UncertainGraph& g, Vertex m, double q_new,
                        std::span<const Candidate> parent, double alpha,
                        ExclusionSet& out);
ExclusionSet generate_exclusion(const UncertainGraph& g, Vertex m,
                                double q_new, std::span<const Candidate> parent,
                                double alpha);

/// Every alpha-maximal clique of g, each exactly once, in depth-first order.
EnumStats mule(const UncertainGraph& g, double alpha, const CliqueSink& sink,
               const SearchOptions& options = {});

/// Alpha-maximal cliques with at least `min_size` vertices. For min_size >= 2
/// the graph is first reduced by shared_neighborhood_filter.
EnumStats large_mule(const UncertainGraph& g, double alpha,
                     std::size_t min_size, const CliqueSink& sink,
                     const SearchOptions& options = {});

/// Drops edges whose endpoints share fewer than t-2 neighbors and vertices
/// without t-1 such supported neighbors, repeated until nothing changes.
/// Dropped vertices stay as isolated ids. Requires t >= 2.
UncertainGraph shared_neighborhood_filter(const UncertainGraph& g,
                                          std::size_t t);

/// Baseline depth-first search that recomputes every clique probability
/// from scratch and runs a full maximality test at the leaves.
EnumStats dfs_noip(const UncertainGraph& g, double alpha,
                   const CliqueSink& sink);

struct EnumConfig {
  double alpha = 0.5;
  std::size_t min_size = 1;
  Algorithm algorithm = Algorithm::mule;
  EmitOrder emit_order = EmitOrder::dfs;
  SearchOptions search;

  void validate() const;
};

/// Validates the config, prunes edges below alpha, runs the chosen algorithm
/// and applies the size threshold and emit order.
EnumStats enumerate(const UncertainGraph& g, const EnumConfig& config,
                    const CliqueSink& sink);

/// Convenience wrapper collecting the output.
std::vector<Clique> enumerate_all(const UncertainGraph& g,
                                  const EnumConfig& config,
                                  EnumStats* stats = nullptr);

/// Sorts cliques lexicographically by their ascending external id lists.
void sort_canonical(const UncertainGraph& g, std::vector<Clique>& cliques);

}  // namespace umc
