#include "umc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "umc/oracle.hpp"
#include "umc/rng.hpp"

namespace umc {

DeterministicGraph gen_barabasi_albert(std::size_t n, std::size_t m,
                                       std::uint64_t seed) {
  if (m < 1 || m >= n) {
    throw std::invalid_argument("barabasi_albert needs 1 <= m < n");
  }
  Rng rng(seed);
  DeterministicGraph g;
  g.n = n;
  g.edges.reserve((m + 1) * m / 2 + (n - m - 1) * m);

  // Every edge contributes both endpoints, so a uniform draw from this list
  // is a draw proportional to degree.
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * g.edges.capacity());
  for (Vertex u = 0; u <= m; ++u) {
    for (Vertex v = u + 1; v <= m; ++v) {
      g.edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  std::vector<Vertex> targets;
  for (auto v = static_cast<Vertex>(m + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      Vertex t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (Vertex t : targets) {
      g.edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return g;
}

DeterministicGraph gen_erdos_renyi(std::size_t n, double density,
                                   std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("erdos_renyi density must lie in [0,1]");
  }
  Rng rng(seed);
  DeterministicGraph g;
  g.n = n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(density)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

UncertainGraph assign_uniform_probabilities(const DeterministicGraph& g,
                                            std::uint64_t seed) {
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.push_back({u, v, 1.0 - rng.uniform01()});
  return UncertainGraph(g.n, edges, g.ids);
}

UncertainGraph assign_constant_probability(const DeterministicGraph& g,
                                           double q) {
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.push_back({u, v, q});
  return UncertainGraph(g.n, edges, g.ids);
}

double coauthor_probability(std::int64_t c) {
  if (c < 1) throw std::invalid_argument("co-authorship count must be >= 1");
  return -std::expm1(-static_cast<double>(c) / 10.0);
}

void GenSpec::validate() const {
  switch (family) {
    case Family::barabasi_albert:
      if (m < 1 || m >= n) throw std::invalid_argument("ba: need 1 <= m < n");
      break;
    case Family::erdos_renyi:
      if (n < 1) throw std::invalid_argument("er: need n >= 1");
      if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("er: density must lie in [0,1]");
      }
      break;
    case Family::extremal:
      if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("extremal: n must be even and >= 4");
      }
      if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("extremal: alpha must lie in (0,1)");
      }
      break;
  }
  if (probs.kind == ProbabilitySpec::Kind::constant &&
      !(probs.q > 0.0 && probs.q <= 1.0)) {
    throw std::invalid_argument("constant probability must lie in (0,1]");
  }
}

std::string GenSpec::label() const {
  std::ostringstream out;
  switch (family) {
    case Family::barabasi_albert:
      out << "ba:n=" << n << ",m=" << m;
      break;
    case Family::erdos_renyi:
      out << "er:n=" << n << ",density=" << density;
      break;
    case Family::extremal:
      return "extremal:n=" + std::to_string(n) + ",alpha=" +
             std::to_string(alpha);
  }
  if (probs.kind == ProbabilitySpec::Kind::constant) out << ",p=" << probs.q;
  return out.str();
}

namespace {

std::uint64_t parse_count(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != value.size() || value.front() == '-') {
    throw std::invalid_argument("bad value for '" + key + "': " + value);
  }
  return v;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw std::invalid_argument("bad value for '" + key + "': " + value);
  }
  return v;
}

}  // namespace

GenSpec parse_gen_spec(const std::string& text, std::uint64_t default_seed) {
  GenSpec spec;
  spec.seed = default_seed;
  auto colon = text.find(':');
  std::string family = text.substr(0, colon);
  if (family == "ba") {
    spec.family = Family::barabasi_albert;
  } else if (family == "er") {
    spec.family = Family::erdos_renyi;
  } else if (family == "extremal") {
    spec.family = Family::extremal;
  } else {
    throw std::invalid_argument("unknown generator family '" + family + "'");
  }

  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  std::istringstream fields(rest);
  std::string kv;
  while (std::getline(fields, kv, ',')) {
    if (kv.empty()) continue;
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("expected key=value in '" + kv + "'");
    }
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (key == "n") {
      spec.n = parse_count(key, value);
    } else if (key == "m") {
      spec.m = parse_count(key, value);
    } else if (key == "density") {
      spec.density = parse_real(key, value);
    } else if (key == "alpha") {
      spec.alpha = parse_real(key, value);
    } else if (key == "seed") {
      spec.seed = parse_count(key, value);
    } else if (key == "p") {
      if (value == "uniform") {
        spec.probs = {};
      } else {
        spec.probs = {ProbabilitySpec::Kind::constant, parse_real(key, value)};
      }
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

UncertainGraph generate(const GenSpec& spec) {
  spec.validate();
  if (spec.family == Family::extremal) {
    return build_extremal_graph(spec.n, spec.alpha);
  }
  auto det = spec.family == Family::barabasi_albert
                 ? gen_barabasi_albert(spec.n, spec.m, spec.seed)
                 : gen_erdos_renyi(spec.n, spec.density, spec.seed);
  if (spec.probs.kind == ProbabilitySpec::Kind::constant) {
    return assign_constant_probability(det, spec.probs.q);
  }
  // Structure and probabilities draw from separate streams.
  return assign_uniform_probabilities(det, Rng(spec.seed).derive(1));
}

}  // namespace umc
