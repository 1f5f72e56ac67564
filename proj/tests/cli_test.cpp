#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "test_util.hpp"
#include "umc/bench.hpp"

namespace umc {
namespace {

using testing::TempDir;

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

const std::string kPath = UMC_TEST_DATA "/path3.txt";

TEST(Cli, EnumeratePath) {
  auto r = run({"enumerate", "--input", kPath, "--alpha", "0.75", "--canonical"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "0.90000000000000002 1 2\n0.80000000000000004 2 3\n");
  EXPECT_NE(r.err.find("cliques: 2"), std::string::npos);
}

TEST(Cli, EnumerateMinSizeFiltersEverything) {
  auto r = run({"enumerate", "--input", kPath, "--alpha", "0.75", "--min-size", "3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, EnumerateRejectsBadArguments) {
  EXPECT_EQ(run({"enumerate", "--input", kPath, "--alpha", "1.5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"enumerate", "--input", kPath, "--alpha", "0.5", "--algo", "x"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"enumerate", "--input", "/nonexistent", "--alpha", "0.5"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
}

TEST(Cli, ParseErrorNamesTheLine) {
  TempDir dir;
  spit(dir.file("bad.txt"), "1 2 0.5\n2 3 1.7\n");
  auto r = run({"enumerate", "--input", dir.file("bad.txt"), "--alpha", "0.5"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, SummaryCountMatchesStreamedLines) {
  TempDir dir;
  ASSERT_EQ(run({"generate", "--family", "er", "--n", "40", "--density", "0.4", "--seed", "3",
                 "--out", dir.file("g.txt")})
                .code,
            0);
  for (const char* algo : {"mule", "dfs-noip", "large-mule"}) {
    auto r = run({"enumerate", "--input", dir.file("g.txt"), "--alpha", "0.05", "--algo", algo});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("cliques: " + std::to_string(count_lines(r.out)) + " "),
              std::string::npos)
        << r.err;
  }
}

TEST(Cli, GenerateEnumerateVerifyRoundTrip) {
  TempDir dir;
  ASSERT_EQ(run({"generate", "--family", "er", "--n", "12", "--density", "0.5", "--seed", "5",
                 "--out", dir.file("g.txt")})
                .code,
            0);
  ASSERT_EQ(run({"enumerate", "--input", dir.file("g.txt"), "--alpha", "0.2",
                 "--check-invariants", "--out", dir.file("c.txt")})
                .code,
            0);
  auto ok = run({"verify", "--input", dir.file("g.txt"), "--cliques", dir.file("c.txt"),
                 "--alpha", "0.2", "--complete"});
  EXPECT_EQ(ok.code, cli::kExitOk) << ok.out << ok.err;
  EXPECT_TRUE(ok.out.empty());
}

TEST(Cli, VerifyFlagsNonMaximalAndMissing) {
  TempDir dir;
  spit(dir.file("c.txt"), "1 2\n0.80000000000000004 2 3\n");
  auto r = run({"verify", "--input", kPath, "--cliques", dir.file("c.txt"), "--alpha", "0.75",
                "--complete"});
  EXPECT_EQ(r.code, cli::kExitVerifyFailed);
  EXPECT_NE(r.out.find("not maximal: {2}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("missing: {1,2}"), std::string::npos) << r.out;
}

TEST(Cli, VerifyFlagsEachDefect) {
  TempDir dir;
  spit(dir.file("c.txt"),
       "0.9 1 2\n0.9 1 2\n0.5 1 3\n0.8 2 3\n");
  auto r = run({"verify", "--input", kPath, "--cliques", dir.file("c.txt"), "--alpha", "0.85"});
  EXPECT_EQ(r.code, cli::kExitVerifyFailed);
  EXPECT_NE(r.out.find("duplicate: {1,2} (line 2)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("not a clique: {1,3}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("below alpha: {2,3}"), std::string::npos) << r.out;

  spit(dir.file("m.txt"), "0.7 1 2\n");
  auto mismatch = run({"verify", "--input", kPath, "--cliques", dir.file("m.txt"), "--alpha",
                       "0.85"});
  EXPECT_EQ(mismatch.code, cli::kExitVerifyFailed);
  EXPECT_NE(mismatch.out.find("probability mismatch"), std::string::npos);

  spit(dir.file("u.txt"), "0.9 1 7\n");
  EXPECT_EQ(run({"verify", "--input", kPath, "--cliques", dir.file("u.txt"), "--alpha", "0.5"})
                .code,
            cli::kExitUsage);
}

TEST(Cli, GenerateExtremal) {
  auto r = run({"generate", "--family", "extremal", "--n", "8", "--alpha", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 29u);  // header plus 28 edges
  EXPECT_EQ(r.out.rfind("n 8\n", 0), 0u);
}

TEST(Cli, GenerateIsDeterministic) {
  auto a = run({"generate", "--family", "ba", "--n", "200", "--m", "3", "--seed", "9"});
  auto b = run({"generate", "--family", "ba", "--n", "200", "--m", "3", "--seed", "9"});
  auto c = run({"generate", "--family", "ba", "--n", "200", "--m", "3", "--seed", "10"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(run({"generate", "--family", "ba", "--n", "5", "--m", "5"}).code, cli::kExitUsage);
}

TEST(Cli, GenerateFromEdges) {
  TempDir dir;
  spit(dir.file("snap.txt"), "# FromNodeId ToNodeId\n10 20\n20 10\n20 30\n");
  auto r = run({"generate", "--family", "from-edges", "--input", dir.file("snap.txt"), "--p",
                "0.5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "10 20 0.5\n20 30 0.5\n");
}

TEST(Cli, BenchWritesCsv) {
  auto r = run({"bench", "--gen", "ba:n=300,m=4", "--gen", "er:n=60,density=0.2", "--alphas",
                "0.1,0.5", "--algos", "mule,dfs-noip", "--csv", "-", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream rows(r.out);
  std::string line;
  std::getline(rows, line);
  EXPECT_EQ(line, kBenchCsvHeader);
  std::map<std::string, std::string> counts;  // graph+alpha -> count
  std::size_t n = 0;
  while (std::getline(rows, line)) {
    ++n;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    // Graph labels contain commas; the last eight columns are fixed.
    ASSERT_GE(f.size(), 9u);
    const std::size_t k = f.size() - 8;
    std::string label;
    for (std::size_t i = 0; i < k; ++i) label += f[i];
    const std::string key = label + "@" + f[k + 1];
    auto [it, fresh] = counts.emplace(key, f[k + 3]);
    if (!fresh) {
      EXPECT_EQ(it->second, f[k + 3]) << key;
    }
    EXPECT_EQ(f.back(), "2");
  }
  EXPECT_EQ(n, 8u);
}

TEST(Cli, BenchNeedsAGraph) {
  EXPECT_EQ(run({"bench", "--alphas", "0.5", "--csv", "-"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bench", "--gen", "zz:n=3", "--alphas", "0.5", "--csv", "-"}).code,
            cli::kExitUsage);
}

}  // namespace
}  // namespace umc
