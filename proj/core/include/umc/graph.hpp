#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace umc {

/// Dense 0-based vertex index. Vertex order (and hence search order) is the
/// numeric order of this index.
using Vertex = std::uint32_t;

/// Vertex label as it appears in input files.
using ExternalId = std::int64_t;

struct WeightedEdge {
  Vertex u;
  Vertex v;
  double p;
};

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph with an independent existence probability in
/// (0,1] on every edge. Immutable after construction; adjacency is stored as
/// CSR with neighbors sorted ascending and probabilities aligned to them.
class UncertainGraph {
 public:
  UncertainGraph() = default;

  /// Validates and builds. Throws GraphError on self-loops, duplicate edges,
  /// out-of-range endpoints, or p outside (0,1]. External ids default to
  /// index + 1.
  UncertainGraph(std::size_t n, std::span<const WeightedEdge> edges,
                 std::vector<ExternalId> external_ids = {});

  std::size_t num_vertices() const noexcept { return external_ids_.size(); }
  std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::span<const double> neighbor_probs(Vertex v) const noexcept {
    return {probs_.data() + offsets_[v], probs_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::size_t max_degree() const noexcept;

  /// p({u,v}) or nullopt when the pair is not an edge.
  std::optional<double> edge_probability(Vertex u, Vertex v) const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept {
    return edge_probability(u, v).has_value();
  }

  ExternalId external_id(Vertex v) const noexcept { return external_ids_[v]; }
  const std::vector<ExternalId>& external_ids() const noexcept {
    return external_ids_;
  }
  std::optional<Vertex> find_vertex(ExternalId id) const;

  /// Every edge once, u < v, sorted.
  std::vector<WeightedEdge> edges() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<double> probs_;
  std::vector<ExternalId> external_ids_;
};

/// Graph with the same vertex set keeping exactly the edges with p >= alpha.
UncertainGraph prune_by_alpha(const UncertainGraph& g, double alpha);

/// Product of edge probabilities inside `c`; nullopt if some pair of `c` is
/// not an edge. Empty and singleton sets have probability 1.
std::optional<double> clique_probability(const UncertainGraph& g,
                                         std::span<const Vertex> c);

/// True iff `c` is an alpha-clique and no single outside vertex extends it to
/// another alpha-clique. `c` must be nonempty.
bool is_alpha_maximal(const UncertainGraph& g, std::span<const Vertex> c,
                      double alpha);

/// Throws std::invalid_argument unless 0 < alpha <= 1.
void check_alpha(double alpha);

}  // namespace umc
