#include <algorithm>

#include "umc/enumerate.hpp"

namespace umc {
namespace {

class NoIncrementalSearch {
 public:
  NoIncrementalSearch(const UncertainGraph& g, double alpha,
                      const CliqueSink& sink)
      : g_(g), alpha_(alpha), sink_(sink) {}

  EnumStats run() {
    if (g_.num_vertices() == 0) return stats_;
    std::vector<Vertex> all(g_.num_vertices());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    search(std::move(all));
    return stats_;
  }

 private:
  void emit() {
    ++stats_.count;
    stats_.out_vertices += clique_.size();
    sink_(CliqueView{clique_, *clique_probability(g_, clique_)});
  }

  void search(std::vector<Vertex> candidates) {
    ++stats_.frames;
    stats_.max_depth = std::max(stats_.max_depth, clique_.size());

    std::vector<Vertex> kept;
    for (Vertex u : candidates) {
      if (!clique_.empty() && u <= clique_.back()) continue;
      clique_.push_back(u);
      auto q = clique_probability(g_, clique_);
      clique_.pop_back();
      if (q && *q >= alpha_) kept.push_back(u);
    }

    if (kept.empty()) {
      if (!clique_.empty() && is_alpha_maximal(g_, clique_, alpha_)) emit();
      return;
    }

    for (Vertex v : kept) {
      clique_.push_back(v);
      if (is_alpha_maximal(g_, clique_, alpha_)) {
        emit();
      } else {
        auto nbrs = g_.neighbors(v);
        std::vector<Vertex> next;
        std::set_intersection(kept.begin(), kept.end(), nbrs.begin(),
                              nbrs.end(), std::back_inserter(next));
        search(std::move(next));
      }
      clique_.pop_back();
    }
  }

  const UncertainGraph& g_;
  double alpha_;
  const CliqueSink& sink_;
  EnumStats stats_;
  std::vector<Vertex> clique_;
};

}  // namespace

EnumStats dfs_noip(const UncertainGraph& g, double alpha,
                   const CliqueSink& sink) {
  check_alpha(alpha);
  return NoIncrementalSearch(g, alpha, sink).run();
}

}  // namespace umc
