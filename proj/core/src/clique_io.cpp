#include "umc/clique_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "umc/graph_io.hpp"

namespace umc {
namespace {

std::vector<ExternalId> sorted_ids(const UncertainGraph& g,
                                   std::span<const Vertex> c) {
  std::vector<ExternalId> ids;
  ids.reserve(c.size());
  for (Vertex v : c) ids.push_back(g.external_id(v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

void write_clique(std::ostream& out, const UncertainGraph& g, CliqueView c) {
  out << format_probability(c.probability);
  for (ExternalId id : sorted_ids(g, c.vertices)) out << ' ' << id;
  out << '\n';
}

std::string describe(const UncertainGraph& g, std::span<const Vertex> c) {
  std::string s = "{";
  bool first = true;
  for (ExternalId id : sorted_ids(g, c)) {
    if (!first) s += ',';
    s += std::to_string(id);
    first = false;
  }
  return s + "}";
}

std::vector<ListedClique> read_cliques(std::istream& in,
                                       const UncertainGraph& g) {
  std::unordered_map<ExternalId, Vertex> index;
  for (Vertex v = 0; v < g.num_vertices(); ++v) index.emplace(g.external_id(v), v);

  std::vector<ListedClique> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string prob;
    if (!(fields >> prob) || prob.front() == '#') continue;

    ListedClique c;
    c.line = line;
    try {
      std::size_t used = 0;
      c.stated_probability = std::stod(prob, &used);
      if (used != prob.size()) throw std::invalid_argument(prob);
    } catch (const std::logic_error&) {
      throw GraphError("malformed probability '" + prob + "'", line);
    }
    std::string tok;
    while (fields >> tok) {
      ExternalId id = 0;
      try {
        std::size_t used = 0;
        id = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw GraphError("malformed vertex id '" + tok + "'", line);
      }
      auto it = index.find(id);
      if (it == index.end()) {
        throw GraphError("unknown vertex " + std::to_string(id), line);
      }
      c.vertices.push_back(it->second);
    }
    if (c.vertices.empty()) throw GraphError("clique without vertices", line);
    std::sort(c.vertices.begin(), c.vertices.end());
    if (std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end()) {
      throw GraphError("repeated vertex in clique", line);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace umc
