#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "umc/enumerate.hpp"

namespace umc {

/// One measured (graph, algorithm, alpha, t) cell.
struct BenchRecord {
  std::string graph;
  Algorithm algo = Algorithm::mule;
  double alpha = 0.0;
  std::size_t t = 1;
  std::uint64_t count = 0;
  std::uint64_t out_vertices = 0;
  double ms = 0.0;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kBenchCsvHeader =
    "graph,algo,alpha,t,count,out_vertices,ms,depth,seed";

/// Times enumerate() on an already loaded graph with a counting sink. With
/// repeats > 1 the fastest run is reported.
BenchRecord run_bench_cell(const UncertainGraph& g, const std::string& label,
                           Algorithm algo, double alpha, std::size_t t,
                           std::uint64_t seed, int repeats = 1);

/// Writes the header on construction and flushes after every row, so an
/// interrupted sweep leaves a parseable prefix.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out);
  void write(const BenchRecord& r);

 private:
  std::ostream& out_;
};

}  // namespace umc
