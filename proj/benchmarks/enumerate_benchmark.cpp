#include <benchmark/benchmark.h>

#include "umc/enumerate.hpp"
#include "umc/generators.hpp"

namespace {

umc::UncertainGraph ba_graph(std::size_t n, double alpha) {
  umc::GenSpec spec;
  spec.n = n;
  spec.m = 10;
  spec.seed = 1;
  return umc::prune_by_alpha(umc::generate(spec), alpha);
}

double alpha_arg(const benchmark::State& state) {
  return static_cast<double>(state.range(1)) / 1000.0;
}

template <class Fn>
void run_enumeration(benchmark::State& state, Fn enumerate) {
  const double alpha = alpha_arg(state);
  auto g = ba_graph(static_cast<std::size_t>(state.range(0)), alpha);
  std::uint64_t count = 0;
  for (auto _ : state) {
    count = 0;
    enumerate(g, alpha, [&](umc::CliqueView) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.counters["cliques"] = static_cast<double>(count);
}

void BM_Mule(benchmark::State& state) {
  run_enumeration(state, [](const auto& g, double a, auto sink) { umc::mule(g, a, sink); });
}

void BM_DfsNoip(benchmark::State& state) {
  run_enumeration(state, [](const auto& g, double a, auto sink) { umc::dfs_noip(g, a, sink); });
}

void BM_LargeMule(benchmark::State& state) {
  run_enumeration(state, [](const auto& g, double a, auto sink) {
    umc::large_mule(g, a, 4, sink);
  });
}

// alpha is passed in thousandths.
void sweep(benchmark::internal::Benchmark* b) {
  for (int n : {1000, 2000, 5000}) {
    for (int a : {1, 10, 100, 500, 900}) b->Args({n, a});
  }
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_Mule)->Apply(sweep);
BENCHMARK(BM_DfsNoip)->Apply(sweep);
BENCHMARK(BM_LargeMule)->Apply(sweep);

void BM_GenerateExtension(benchmark::State& state) {
  auto g = ba_graph(2000, 0.001);
  umc::Vertex hub = 0;
  for (umc::Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > g.degree(hub)) hub = v;
  }
  umc::ExtensionSet root;
  for (umc::Vertex v = 0; v < g.num_vertices(); ++v) root.push_back({v, 1.0});
  umc::ExtensionSet next;
  for (auto _ : state) {
    umc::generate_extension(g, hub, 1.0, root, 0.001, next);
    benchmark::DoNotOptimize(next.data());
  }
  state.counters["degree"] = static_cast<double>(g.degree(hub));
}
BENCHMARK(BM_GenerateExtension);

}  // namespace

BENCHMARK_MAIN();
