#include "umc/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "umc/oracle.hpp"

namespace umc {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::mule:
      return "mule";
    case Algorithm::large_mule:
      return "large-mule";
    case Algorithm::dfs_noip:
      return "dfs-noip";
    case Algorithm::oracle:
      return "oracle";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::mule, Algorithm::large_mule, Algorithm::dfs_noip,
                 Algorithm::oracle}) {
    if (name == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

void EnumConfig::validate() const {
  check_alpha(alpha);
  if (min_size < 1) throw std::invalid_argument("min_size must be >= 1");
}

void sort_canonical(const UncertainGraph& g, std::vector<Clique>& cliques) {
  std::vector<std::pair<std::vector<ExternalId>, std::size_t>> keys;
  keys.reserve(cliques.size());
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    std::vector<ExternalId> ids;
    ids.reserve(cliques[i].vertices.size());
    for (Vertex v : cliques[i].vertices) ids.push_back(g.external_id(v));
    std::sort(ids.begin(), ids.end());
    keys.emplace_back(std::move(ids), i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Clique> sorted;
  sorted.reserve(cliques.size());
  for (auto& [ids, i] : keys) sorted.push_back(std::move(cliques[i]));
  cliques = std::move(sorted);
}

EnumStats enumerate(const UncertainGraph& g, const EnumConfig& config,
                    const CliqueSink& sink) {
  config.validate();
  const UncertainGraph pruned = prune_by_alpha(g, config.alpha);

  std::vector<Clique> held;
  const bool canonical = config.emit_order == EmitOrder::canonical;
  EnumStats emitted;
  // Applies the size threshold for algorithms that do not enforce it
  // themselves, and buffers when a canonical order is requested.
  CliqueSink filtered = [&](CliqueView c) {
    if (c.vertices.size() < config.min_size) return;
    if (canonical) {
      held.emplace_back(c);
      return;
    }
    ++emitted.count;
    emitted.out_vertices += c.vertices.size();
    sink(c);
  };

  EnumStats stats;
  switch (config.algorithm) {
    case Algorithm::mule:
    case Algorithm::large_mule:
      stats = large_mule(pruned, config.alpha, config.min_size, filtered,
                         config.search);
      break;
    case Algorithm::dfs_noip:
      stats = dfs_noip(pruned, config.alpha, filtered);
      break;
    case Algorithm::oracle: {
      auto result = brute_force_enumerate(pruned, config.alpha);
      for (const auto& c : result.cliques) {
        filtered(CliqueView{c.vertices, c.probability});
      }
      break;
    }
  }

  if (canonical) {
    sort_canonical(g, held);
    for (const auto& c : held) {
      ++emitted.count;
      emitted.out_vertices += c.vertices.size();
      sink(CliqueView{c.vertices, c.probability});
    }
  }
  stats.count = emitted.count;
  stats.out_vertices = emitted.out_vertices;
  return stats;
}

std::vector<Clique> enumerate_all(const UncertainGraph& g,
                                  const EnumConfig& config, EnumStats* stats) {
  std::vector<Clique> out;
  auto s = enumerate(g, config, [&out](CliqueView c) { out.emplace_back(c); });
  if (stats) *stats = s;
  return out;
}

}  // namespace umc
