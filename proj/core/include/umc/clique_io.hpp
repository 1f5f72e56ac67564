#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "umc/enumerate.hpp"

namespace umc {

/// Writes "<prob:17sig> <v1> ... <vk>\n" with external ids ascending.
void write_clique(std::ostream& out, const UncertainGraph& g, CliqueView c);

struct ListedClique {
  std::vector<Vertex> vertices;  // internal, sorted
  double stated_probability = 0.0;
  std::size_t line = 0;
};

/// Parses a clique stream against `g`. Unknown vertex ids, repeated ids
/// within a line, or malformed fields throw GraphError with the line number.
std::vector<ListedClique> read_cliques(std::istream& in, const UncertainGraph& g);

/// Renders a vertex set as "{3,5,9}" using sorted external ids.
std::string describe(const UncertainGraph& g, std::span<const Vertex> c);

}  // namespace umc
