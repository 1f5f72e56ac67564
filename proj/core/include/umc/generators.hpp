#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "umc/graph.hpp"

namespace umc {

/// Edge structure without probabilities, as produced by the random models.
struct DeterministicGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v
  std::vector<ExternalId> ids;                   // empty means 1..n
};

/// Preferential attachment: seed clique on m+1 vertices, then every new
/// vertex links to m distinct existing vertices drawn proportionally to
/// degree. Requires 1 <= m < n.
DeterministicGraph gen_barabasi_albert(std::size_t n, std::size_t m,
                                       std::uint64_t seed);

/// G(n, density): every pair independently.
DeterministicGraph gen_erdos_renyi(std::size_t n, double density,
                                   std::uint64_t seed);

/// p = 1 - u with u uniform on [0,1), so p lies in (0,1].
UncertainGraph assign_uniform_probabilities(const DeterministicGraph& g,
                                            std::uint64_t seed);
UncertainGraph assign_constant_probability(const DeterministicGraph& g,
                                           double q);

/// 1 - exp(-c/10) for c >= 1 co-authored papers.
double coauthor_probability(std::int64_t c);

enum class Family { barabasi_albert, erdos_renyi, extremal };

struct ProbabilitySpec {
  enum class Kind { uniform01, constant } kind = Kind::uniform01;
  double q = 1.0;
};

/// One synthetic input, e.g. parsed from "ba:n=2000,m=10".
struct GenSpec {
  Family family = Family::barabasi_albert;
  std::size_t n = 0;
  std::size_t m = 10;         // barabasi_albert
  double density = 0.5;       // erdos_renyi
  double alpha = 0.5;         // extremal
  ProbabilitySpec probs;
  std::uint64_t seed = 1;

  /// Validates family ranges; throws std::invalid_argument.
  void validate() const;
  /// Stable label used in bench CSV rows.
  std::string label() const;
};

/// "ba:n=..,m=..", "er:n=..,density=..", "extremal:n=..,alpha=..", with
/// optional "p=uniform" or "p=<q>" and "seed=<s>" keys.
GenSpec parse_gen_spec(const std::string& text, std::uint64_t default_seed);

UncertainGraph generate(const GenSpec& spec);

}  // namespace umc
