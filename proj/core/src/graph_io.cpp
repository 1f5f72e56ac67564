#include "umc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "umc/generators.hpp"

namespace umc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line,
                       const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw GraphError(std::string("malformed ") + what + " '" +
                         std::string(tok) + "'",
                     line);
  }
  return v;
}

double parse_real(std::string_view tok, std::size_t line) {
  std::string s(tok);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw GraphError("malformed probability '" + s + "'", line);
  }
  return v;
}

}  // namespace

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

UncertainGraph load_graph(std::istream& in, ProbModel model) {
  std::vector<WeightedEdge> edges;
  std::vector<ExternalId> ids;
  std::unordered_map<ExternalId, Vertex> index;
  std::unordered_set<std::uint64_t> seen_pairs;
  std::optional<std::int64_t> declared;
  bool any_data = false;

  auto intern = [&](ExternalId id, std::size_t line) -> Vertex {
    if (id < 1) throw GraphError("vertex id must be positive", line);
    if (declared) {
      if (id > *declared) {
        throw GraphError("vertex id " + std::to_string(id) +
                             " exceeds declared count " +
                             std::to_string(*declared),
                         line);
      }
      return static_cast<Vertex>(id - 1);
    }
    auto [it, inserted] = index.try_emplace(id, static_cast<Vertex>(ids.size()));
    if (inserted) ids.push_back(id);
    return it->second;
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (toks[0] == "n") {
      if (any_data) throw GraphError("'n' header must precede edges", line);
      if (toks.size() != 2) throw GraphError("header is 'n <count>'", line);
      auto count = parse_int(toks[1], line, "vertex count");
      if (count < 0) throw GraphError("negative vertex count", line);
      declared = count;
      ids.resize(static_cast<std::size_t>(count));
      for (std::int64_t i = 0; i < count; ++i) ids[static_cast<std::size_t>(i)] = i + 1;
      any_data = true;
      continue;
    }
    any_data = true;
    if (toks.size() != 3) {
      throw GraphError("expected 'u v p', got " + std::to_string(toks.size()) +
                           " fields",
                       line);
    }
    auto eu = parse_int(toks[0], line, "vertex id");
    auto ev = parse_int(toks[1], line, "vertex id");
    if (eu == ev) throw GraphError("self-loop on vertex " + std::to_string(eu), line);

    double p = 0.0;
    if (model == ProbModel::coauthor) {
      auto c = parse_int(toks[2], line, "co-authorship count");
      if (c < 1) throw GraphError("co-authorship count must be >= 1", line);
      p = coauthor_probability(c);
    } else {
      p = parse_real(toks[2], line);
      if (!(p > 0.0 && p <= 1.0)) {
        throw GraphError("probability " + std::string(toks[2]) +
                             " outside (0,1]",
                         line);
      }
    }

    Vertex u = intern(eu, line);
    Vertex v = intern(ev, line);
    auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen_pairs.insert(key).second) {
      throw GraphError("duplicate edge {" + std::to_string(eu) + "," +
                           std::to_string(ev) + "}",
                       line);
    }
    edges.push_back({u, v, p});
  }
  const std::size_t n = ids.size();
  return UncertainGraph(n, edges, std::move(ids));
}

DeterministicGraph load_deterministic(std::istream& in) {
  DeterministicGraph g;
  std::unordered_map<ExternalId, Vertex> index;
  std::unordered_set<std::uint64_t> seen_pairs;
  auto intern = [&](ExternalId id) {
    auto [it, inserted] = index.try_emplace(id, static_cast<Vertex>(g.ids.size()));
    if (inserted) g.ids.push_back(id);
    return it->second;
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks.size() < 2) throw GraphError("expected 'u v'", line);
    auto eu = parse_int(toks[0], line, "vertex id");
    auto ev = parse_int(toks[1], line, "vertex id");
    Vertex u = intern(eu);
    Vertex v = intern(ev);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    auto key = (static_cast<std::uint64_t>(u) << 32) | v;
    if (seen_pairs.insert(key).second) g.edges.emplace_back(u, v);
  }
  g.n = g.ids.size();
  return g;
}

UncertainGraph load_graph_file(const std::string& path, ProbModel model) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return load_graph(in, model);
}

void write_graph(std::ostream& out, const UncertainGraph& g) {
  const auto& ids = g.external_ids();
  bool contiguous = true;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] != static_cast<ExternalId>(i + 1)) contiguous = false;
  }
  if (contiguous) {
    out << "n " << g.num_vertices() << '\n';
  } else {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) == 0) {
        throw GraphError("isolated vertex " + std::to_string(ids[v]) +
                         " needs ids 1..n to be written");
      }
    }
  }

  struct Row {
    ExternalId a, b;
    double p;
  };
  std::vector<Row> rows;
  rows.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    auto a = ids[e.u], b = ids[e.v];
    rows.push_back({std::min(a, b), std::max(a, b), e.p});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (const auto& r : rows) {
    out << r.a << ' ' << r.b << ' ' << format_probability(r.p) << '\n';
  }
}

void write_graph_file(const std::string& path, const UncertainGraph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  write_graph(out, g);
}

}  // namespace umc
