#pragma once

#include <iosfwd>
#include <string>

#include "umc/generators.hpp"
#include "umc/graph.hpp"

namespace umc {

/// How the third column of an edge line is interpreted.
enum class ProbModel {
  direct,    // "u v p", p in (0,1]
  coauthor,  // "u v c", c >= 1 co-authored papers, p = 1 - exp(-c/10)
};

/// Reads the edge-list format:
///
///   # comment
///   n <count>        optional, first data line; declares ids 1..count
///   <u> <v> <p>      one undirected edge per line
///
/// Without a header, internal vertex order is first-appearance order. With a
/// header, vertex id k maps to internal index k-1. Errors carry the 1-based
/// line number.
UncertainGraph load_graph(std::istream& in, ProbModel model = ProbModel::direct);
UncertainGraph load_graph_file(const std::string& path,
                               ProbModel model = ProbModel::direct);

/// Writes edges in external-id order with probabilities at 17 significant
/// digits, so that load_graph reproduces every probability bit-exactly. The
/// "n" header is emitted when ids are exactly 1..n.
void write_graph(std::ostream& out, const UncertainGraph& g);
void write_graph_file(const std::string& path, const UncertainGraph& g);

/// Reads an unweighted "u v" edge list (SNAP style: '#' comments, extra
/// columns ignored). Self-loops are skipped and both directions of an edge
/// collapse to one. Vertex order is first appearance.
DeterministicGraph load_deterministic(std::istream& in);

/// "%.17g" rendering shared by every text output.
std::string format_probability(double p);

}  // namespace umc
