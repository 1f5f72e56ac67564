#include "umc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <ostream>

#include "umc/graph_io.hpp"

namespace umc {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

BenchRecord run_bench_cell(const UncertainGraph& g, const std::string& label,
                           Algorithm algo, double alpha, std::size_t t,
                           std::uint64_t seed, int repeats) {
  EnumConfig config;
  config.alpha = alpha;
  config.min_size = t;
  config.algorithm = algo;

  BenchRecord r;
  r.graph = label;
  r.algo = algo;
  r.alpha = alpha;
  r.t = t;
  r.seed = seed;
  r.ms = std::numeric_limits<double>::infinity();
  for (int i = 0; i < std::max(repeats, 1); ++i) {
    auto start = std::chrono::steady_clock::now();
    EnumStats stats = enumerate(g, config, [](CliqueView) {});
    std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    r.ms = std::min(r.ms, took.count());
    r.count = stats.count;
    r.out_vertices = stats.out_vertices;
    r.depth = stats.max_depth;
  }
  return r;
}

CsvWriter::CsvWriter(std::ostream& out) : out_(out) {
  out_ << kBenchCsvHeader << '\n' << std::flush;
}

void CsvWriter::write(const BenchRecord& r) {
  out_ << csv_field(r.graph) << ',' << to_string(r.algo) << ','
       << format_probability(r.alpha) << ',' << r.t << ',' << r.count << ','
       << r.out_vertices << ',' << r.ms << ',' << r.depth << ',' << r.seed
       << '\n'
       << std::flush;
}

}  // namespace umc
