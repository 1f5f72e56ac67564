#include "umc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace umc {

GraphError::GraphError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                              : what),
      line_(line) {}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0,1], got " +
                                std::to_string(alpha));
  }
}

UncertainGraph::UncertainGraph(std::size_t n,
                               std::span<const WeightedEdge> edges,
                               std::vector<ExternalId> external_ids)
    : external_ids_(std::move(external_ids)) {
  if (external_ids_.empty()) {
    external_ids_.resize(n);
    std::iota(external_ids_.begin(), external_ids_.end(), ExternalId{1});
  } else if (external_ids_.size() != n) {
    throw GraphError("external id table has " +
                     std::to_string(external_ids_.size()) +
                     " entries for " + std::to_string(n) + " vertices");
  } else {
    std::unordered_set<ExternalId> seen(external_ids_.begin(),
                                        external_ids_.end());
    if (seen.size() != n) throw GraphError("external ids are not unique");
  }

  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop on vertex " +
                       std::to_string(external_ids_[e.u]));
    }
    if (!(e.p > 0.0 && e.p <= 1.0)) {
      throw GraphError("edge probability outside (0,1]");
    }
    ++degree[e.u];
    ++degree[e.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];

  std::vector<std::pair<Vertex, double>> slots(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges) {
    slots[cursor[e.u]++] = {e.v, e.p};
    slots[cursor[e.v]++] = {e.u, e.p};
  }

  neighbors_.resize(slots.size());
  probs_.resize(slots.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = slots.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last,
              [](const auto& a, const auto& b) { return a.first < b.first; });
    auto dup = std::adjacent_find(
        first, last,
        [](const auto& a, const auto& b) { return a.first == b.first; });
    if (dup != last) {
      throw GraphError("duplicate edge {" + std::to_string(external_ids_[v]) +
                       "," + std::to_string(external_ids_[dup->first]) + "}");
    }
    for (auto it = first; it != last; ++it) {
      auto i = static_cast<std::size_t>(it - slots.begin());
      neighbors_[i] = it->first;
      probs_[i] = it->second;
    }
  }
}

std::size_t UncertainGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    best = std::max(best, degree(static_cast<Vertex>(v)));
  }
  return best;
}

std::optional<double> UncertainGraph::edge_probability(
    Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return neighbor_probs(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::optional<Vertex> UncertainGraph::find_vertex(ExternalId id) const {
  auto it = std::find(external_ids_.begin(), external_ids_.end(), id);
  if (it == external_ids_.end()) return std::nullopt;
  return static_cast<Vertex>(it - external_ids_.begin());
}

std::vector<WeightedEdge> UncertainGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    auto nbrs = neighbors(u);
    auto probs = neighbor_probs(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (u < nbrs[i]) out.push_back({u, nbrs[i], probs[i]});
    }
  }
  return out;
}

UncertainGraph prune_by_alpha(const UncertainGraph& g, double alpha) {
  check_alpha(alpha);
  auto edges = g.edges();
  std::erase_if(edges, [alpha](const WeightedEdge& e) { return !(e.p >= alpha); });
  return UncertainGraph(g.num_vertices(), edges, g.external_ids());
}

std::optional<double> clique_probability(const UncertainGraph& g,
                                         std::span<const Vertex> c) {
  double q = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      auto p = g.edge_probability(c[i], c[j]);
      if (!p) return std::nullopt;
      q *= *p;
    }
  }
  return q;
}

bool is_alpha_maximal(const UncertainGraph& g, std::span<const Vertex> c,
                      double alpha) {
  if (c.empty()) throw std::invalid_argument("is_alpha_maximal: empty set");
  auto q = clique_probability(g, c);
  if (!q || !(*q >= alpha)) return false;

  std::vector<Vertex> members(c.begin(), c.end());
  std::sort(members.begin(), members.end());
  // Any extending vertex is adjacent to every member, in particular to the
  // member of smallest degree.
  Vertex pivot = *std::min_element(
      members.begin(), members.end(),
      [&g](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (Vertex w : g.neighbors(pivot)) {
    if (std::binary_search(members.begin(), members.end(), w)) continue;
    double extended = *q;
    bool adjacent = true;
    for (Vertex m : members) {
      auto p = g.edge_probability(w, m);
      if (!p) {
        adjacent = false;
        break;
      }
      extended *= *p;
    }
    if (adjacent && extended >= alpha) return false;
  }
  return true;
}

}  // namespace umc
