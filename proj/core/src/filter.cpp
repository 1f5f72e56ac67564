#include <algorithm>
#include <stdexcept>

#include "umc/enumerate.hpp"

namespace umc {
namespace {

std::size_t count_common(const std::vector<Vertex>& a,
                         const std::vector<Vertex>& b) {
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

void erase_sorted(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

}  // namespace

UncertainGraph shared_neighborhood_filter(const UncertainGraph& g,
                                          std::size_t t) {
  if (t < 2) throw std::invalid_argument("shared_neighborhood_filter needs t >= 2");
  const std::size_t n = g.num_vertices();
  const std::size_t need_common = t - 2;
  const std::size_t need_support = t - 1;

  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    adj[v].assign(nbrs.begin(), nbrs.end());
  }

  std::vector<std::pair<Vertex, Vertex>> doomed_edges;
  std::vector<Vertex> doomed_vertices;
  for (bool changed = true; changed;) {
    changed = false;

    doomed_edges.clear();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : adj[u]) {
        if (u < v && count_common(adj[u], adj[v]) < need_common) {
          doomed_edges.emplace_back(u, v);
        }
      }
    }
    for (auto [u, v] : doomed_edges) {
      erase_sorted(adj[u], v);
      erase_sorted(adj[v], u);
    }
    changed |= !doomed_edges.empty();

    doomed_vertices.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (adj[v].empty()) continue;
      std::size_t support = 0;
      for (Vertex u : adj[v]) {
        if (count_common(adj[u], adj[v]) >= need_common) ++support;
      }
      if (support < need_support) doomed_vertices.push_back(v);
    }
    for (Vertex v : doomed_vertices) {
      for (Vertex u : adj[v]) erase_sorted(adj[u], v);
      adj[v].clear();
    }
    changed |= !doomed_vertices.empty();
  }

  std::vector<WeightedEdge> kept;
  for (const auto& e : g.edges()) {
    if (std::binary_search(adj[e.u].begin(), adj[e.u].end(), e.v)) kept.push_back(e);
  }
  return UncertainGraph(n, kept, g.external_ids());
}

}  // namespace umc
