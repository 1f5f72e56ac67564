#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "umc/enumerate.hpp"

namespace umc {
namespace {

// Calls f(candidate, p(candidate, m)) for every candidate adjacent to m, in
// ascending vertex order. When one side is much shorter, it is walked and
// the other side binary-searched, so the cost is bounded by the shorter list
// times a log factor rather than the neighborhood of a hub.
template <typename F>
void for_each_adjacent(std::span<const Candidate> cands,
                       std::span<const Vertex> nbrs,
                       std::span<const double> probs, F&& f) {
  if (cands.empty() || nbrs.empty()) return;
  constexpr std::size_t kSkew = 16;

  if (cands.size() * kSkew < nbrs.size()) {
    auto lo = nbrs.begin();
    for (const Candidate& c : cands) {
      lo = std::lower_bound(lo, nbrs.end(), c.vertex);
      if (lo == nbrs.end()) return;
      if (*lo == c.vertex) f(c, probs[static_cast<std::size_t>(lo - nbrs.begin())]);
    }
  } else if (nbrs.size() * kSkew < cands.size()) {
    auto lo = cands.begin();
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      lo = std::lower_bound(lo, cands.end(), nbrs[j],
                            [](const Candidate& c, Vertex v) { return c.vertex < v; });
      if (lo == cands.end()) return;
      if (lo->vertex == nbrs[j]) f(*lo, probs[j]);
    }
  } else {
    std::size_t i = 0, j = 0;
    while (i < cands.size() && j < nbrs.size()) {
      if (cands[i].vertex < nbrs[j]) {
        ++i;
      } else if (nbrs[j] < cands[i].vertex) {
        ++j;
      } else {
        f(cands[i], probs[j]);
        ++i;
        ++j;
      }
    }
  }
}

// Keeps (v, f * p) when q_new * (f * p) >= alpha. The product is associated
// the same way the child frame will compute its clique probability, so the
// admission test and the emitted probability agree bit for bit.
void extend_into(double q_new, std::span<const Candidate> cands, std::span<const Vertex> nbrs,
                 std::span<const double> probs, double alpha,
                 std::vector<Candidate>& out) {
  out.clear();
  for_each_adjacent(cands, nbrs, probs, [&](const Candidate& c, double p) {
    double factor = c.factor * p;
    if (q_new * factor >= alpha) out.push_back({c.vertex, factor});
  });
}

class Search {
 public:
  Search(const UncertainGraph& g, double alpha, std::size_t min_size,
         const CliqueSink& sink, const SearchOptions& options)
      : g_(g), alpha_(alpha), min_size_(min_size), sink_(sink), options_(options) {}

  EnumStats run() {
    const std::size_t n = g_.num_vertices();
    if (n == 0) return stats_;
    const std::size_t levels = g_.max_degree() + 2;
    include_.resize(levels);
    exclude_.resize(levels);
    clique_.reserve(levels);

    include_[0].reserve(n);
    for (Vertex v = 0; v < n; ++v) include_[0].push_back({v, 1.0});

    bool native = options_.recursion == Recursion::native ||
                  (options_.recursion == Recursion::automatic &&
                   levels <= kNativeDepthLimit);
    if (native) {
      expand(0, 1.0);
    } else {
      expand_iterative();
    }
    return stats_;
  }

 private:
  struct Frame {
    double q;
    std::size_t next;
  };

  void emit(double q) {
    ++stats_.count;
    stats_.out_vertices += clique_.size();
    sink_(CliqueView{clique_, q});
  }

  // Bookkeeping on entering the frame for clique_ at `depth`. Returns true
  // when the frame is a leaf (I and X both empty), having emitted it.
  bool enter(std::size_t depth, double q) {
    ++stats_.frames;
    stats_.max_depth = std::max(stats_.max_depth, clique_.size());
    if (options_.check_invariants) check_frame(q, include_[depth], exclude_[depth]);
    if (include_[depth].empty() && exclude_[depth].empty()) {
      emit(q);
      return true;
    }
    return false;
  }

  // Builds I' for clique_ (already extended by u) into level depth+1.
  // Returns false when the size guard prunes the branch.
  bool build_child(std::size_t depth, std::size_t index, double q_new) {
    const Vertex m = clique_.back();
    auto parent = std::span<const Candidate>(include_[depth]).subspan(index + 1);
    generate_extension(g_, m, q_new, parent, alpha_, include_[depth + 1]);
    if (clique_.size() + include_[depth + 1].size() < min_size_) return false;
    generate_exclusion(g_, m, q_new, exclude_[depth], alpha_, exclude_[depth + 1]);
    return true;
  }

  void expand(std::size_t depth, double q) {
    if (enter(depth, q)) return;
    assert(depth + 1 < include_.size());
    auto& include = include_[depth];
    auto& exclude = exclude_[depth];
    for (std::size_t i = 0; i < include.size(); ++i) {
      const Candidate u = include[i];
      const double q_new = q * u.factor;
      clique_.push_back(u.vertex);
      if (!build_child(depth, i, q_new)) {
        clique_.pop_back();
        continue;
      }
      expand(depth + 1, q_new);
      clique_.pop_back();
      exclude.push_back(u);
    }
  }

  void expand_iterative() {
    std::vector<Frame> stack;
    if (enter(0, 1.0)) return;
    stack.push_back({1.0, 0});

    // The child rooted at include_[depth][next - 1] has finished.
    auto finish_child = [&](std::size_t depth) {
      clique_.pop_back();
      exclude_[depth].push_back(include_[depth][stack[depth].next - 1]);
    };

    while (!stack.empty()) {
      const std::size_t depth = stack.size() - 1;
      auto& include = include_[depth];
      if (stack.back().next == include.size()) {
        stack.pop_back();
        if (!stack.empty()) finish_child(depth - 1);
        continue;
      }
      const std::size_t i = stack.back().next++;
      const Candidate u = include[i];
      const double q_new = stack.back().q * u.factor;
      clique_.push_back(u.vertex);
      if (!build_child(depth, i, q_new)) {
        clique_.pop_back();
        continue;
      }
      if (enter(depth + 1, q_new)) {
        finish_child(depth);
      } else {
        stack.push_back({q_new, 0});
      }
    }
  }

  void check_frame(double q, std::span<const Candidate> include,
                   std::span<const Candidate> exclude) {
    std::vector<Vertex> probe;
    const bool has_max = !clique_.empty();
    const Vertex top = has_max ? clique_.back() : 0;

    auto check_entry = [&](const Candidate& c, bool above) {
      ++stats_.invariant_checks;
      bool ok = above ? (!has_max || c.vertex > top) : (has_max && c.vertex < top);
      ok = ok && !std::binary_search(clique_.begin(), clique_.end(), c.vertex);
      probe = clique_;
      probe.push_back(c.vertex);
      std::sort(probe.begin(), probe.end());
      auto direct = clique_probability(g_, probe);
      if (!direct) {
        ok = false;
      } else {
        double cached = q * c.factor;
        ok = ok && cached >= alpha_ &&
             std::abs(cached - *direct) <= kFactorTolerance * *direct;
      }
      if (!ok) ++stats_.invariant_violations;
    };
    for (const auto& c : include) check_entry(c, true);
    for (const auto& c : exclude) check_entry(c, false);

    // I holds every vertex above max(C) that extends C to an alpha-clique.
    probe = clique_;
    for (Vertex u = has_max ? top + 1 : 0; u < g_.num_vertices(); ++u) {
      probe.push_back(u);
      auto direct = clique_probability(g_, probe);
      probe.pop_back();
      if (!direct || !(*direct >= alpha_)) continue;
      ++stats_.invariant_checks;
      auto it = std::lower_bound(
          include.begin(), include.end(), u,
          [](const Candidate& c, Vertex v) { return c.vertex < v; });
      if (it == include.end() || it->vertex != u) ++stats_.invariant_violations;
    }
  }

  const UncertainGraph& g_;
  double alpha_;
  std::size_t min_size_;
  const CliqueSink& sink_;
  SearchOptions options_;
  EnumStats stats_;
  std::vector<Vertex> clique_;
  // Per-depth scratch: frame at depth d owns include_[d] and exclude_[d].
  std::vector<ExtensionSet> include_;
  std::vector<ExclusionSet> exclude_;
};

}  // namespace

void generate_extension(const UncertainGraph& g, Vertex m, double q_new,
                        std::span<const Candidate> parent, double alpha,
                        ExtensionSet& out) {
  auto above = std::upper_bound(
      parent.begin(), parent.end(), m,
      [](Vertex v, const Candidate& c) { return v < c.vertex; });
  auto nbrs = g.neighbors(m);
  auto probs = g.neighbor_probs(m);
  auto first_nbr = std::upper_bound(nbrs.begin(), nbrs.end(), m);
  auto skip = static_cast<std::size_t>(first_nbr - nbrs.begin());
  extend_into(q_new, {above, parent.end()}, nbrs.subspan(skip),
              probs.subspan(skip), alpha, out);
}

ExtensionSet generate_extension(const UncertainGraph& g, Vertex m,
                                double q_new, std::span<const Candidate> parent,
                                double alpha) {
  ExtensionSet out;
  generate_extension(g, m, q_new, parent, alpha, out);
  return out;
}

void generate_exclusion(const UncertainGraph& g, Vertex m, double q_new,
                        std::span<const Candidate> parent, double alpha,
                        ExclusionSet& out) {
  extend_into(q_new, parent, g.neighbors(m), g.neighbor_probs(m), alpha, out);
}

ExclusionSet generate_exclusion(const UncertainGraph& g, Vertex m,
                                double q_new, std::span<const Candidate> parent,
                                double alpha) {
  ExclusionSet out;
  generate_exclusion(g, m, q_new, parent, alpha, out);
  return out;
}

EnumStats mule(const UncertainGraph& g, double alpha, const CliqueSink& sink,
               const SearchOptions& options) {
  check_alpha(alpha);
  return Search(g, alpha, 1, sink, options).run();
}

EnumStats large_mule(const UncertainGraph& g, double alpha,
                     std::size_t min_size, const CliqueSink& sink,
                     const SearchOptions& options) {
  check_alpha(alpha);
  if (min_size < 1) throw std::invalid_argument("min_size must be >= 1");
  if (min_size == 1) return Search(g, alpha, 1, sink, options).run();
  UncertainGraph filtered = shared_neighborhood_filter(g, min_size);
  return Search(filtered, alpha, min_size, sink, options).run();
}

}  // namespace umc
