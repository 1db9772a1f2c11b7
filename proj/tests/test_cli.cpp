#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = dgas::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines_of(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

std::string fixture_path(const std::string& name) { return std::string(DGAS_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(CliCheck, ExampleFixtures) {
  auto r = run({"check", "--alpha", "3/4", "--input", fixture_path("example1.g6")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["abs_det_walk"], "391969290854200828325249716881157038635480474646935680");
  EXPECT_EQ(j["verdict"], "CERTIFIED_DGAS");

  EXPECT_EQ(run({"check", "--alpha", "10/11", "--input", fixture_path("example2.g6")}).code, 0);
  EXPECT_EQ(run({"check", "--alpha", "2/3", "--format", "edgelist", "--input",
                 fixture_path("example2.edgelist")}).code,
            0);
}

TEST(CliCheck, VerdictExitCodes) {
  EXPECT_EQ(run({"check", "--alpha", "0", "--graph", "Bw"}).code, 2);     // K3: too small
  EXPECT_EQ(run({"check", "--alpha", "0", "--graph", "Dhc"}).code, 1);    // C5: singular
  EXPECT_EQ(run({"check", "--alpha", "2/3", "--graph", "E^_O"}).code, 2); // excluded parity
  EXPECT_EQ(run({"check", "--alpha", "1/3", "--input", fixture_path("example1.g6")}).code, 1);
}

TEST(CliCheck, StdinAndTable) {
  const auto g6 = oracle::read_fixture("example1.g6");
  auto r = run({"check", "--alpha", "5/6", "--input", "-", "--output", "table"}, g6);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("CERTIFIED_DGAS"), std::string::npos);
}

TEST(CliCheck, UsageErrors) {
  EXPECT_EQ(run({"check", "--graph", "Dhc"}).code, dgas::cli::kExitUsage);  // no alpha
  EXPECT_EQ(run({"check", "--alpha", "1", "--graph", "Dhc"}).code, dgas::cli::kExitUsage);
  EXPECT_EQ(run({"check", "--alpha", "0", "--graph", "D~"}).code, dgas::cli::kExitUsage);
  EXPECT_EQ(run({"check", "--alpha", "0", "--input", "/nonexistent/x.g6"}).code, dgas::cli::kExitUsage);
  EXPECT_EQ(run({"check", "--alpha", "0", "--graph", "Dhc", "--threads", "0"}).code,
            dgas::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, dgas::cli::kExitUsage);
  EXPECT_EQ(run({}).code, dgas::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCheck, AlphaFromEnvironment) {
  ::setenv("DGAS_ALPHA", "3/4", 1);
  auto r = run({"check", "--input", fixture_path("example1.g6")});
  ::unsetenv("DGAS_ALPHA");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["alpha"], "3/4");
}

TEST(CliBatch, ReportsAndSummary) {
  const std::string file = "Dhc\nE^_O\n" + oracle::read_fixture("example1.g6") + "\n";
  auto r = run({"batch", "--alpha", "0", "--input", "-"}, file);
  EXPECT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 4u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(lines[i]["line"], i + 1);
  EXPECT_EQ(lines[0]["verdict"], "SINGULAR_WALK_MATRIX");
  EXPECT_TRUE(lines[3]["summary"].get<bool>());
  EXPECT_EQ(lines[3]["total"], 3);
  EXPECT_EQ(lines[3]["errors"], 0);
}

TEST(CliBatch, MalformedLineReportedInline) {
  auto r = run({"batch", "--alpha", "1/2", "--input", "-"}, "Dhc\n!!bad\nE^_O\n");
  EXPECT_EQ(r.code, dgas::cli::kExitDataErr);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_TRUE(lines[1].contains("error"));
  EXPECT_EQ(lines[1]["line"], 2);
  EXPECT_FALSE(lines[0].contains("error"));
  EXPECT_FALSE(lines[2].contains("error"));
  EXPECT_EQ(lines[3]["errors"], 1);
}

TEST(CliBatch, ByteIdenticalAcrossThreadCounts) {
  std::string file;
  for (const auto& g : dgas::enumerate_graphs(6)) file += dgas::encode_graph6(g) + "\n";
  const auto one = run({"batch", "--alpha", "2/3", "--threads", "1", "--input", "-"}, file);
  const auto four = run({"batch", "--alpha", "2/3", "--threads", "4", "--input", "-"}, file);
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
}

TEST(CliSnf, ShapeAndSingular) {
  auto r = run({"snf", "--alpha", "3/4", "--input", fixture_path("example1.g6")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["shape_holds"].get<bool>());
  EXPECT_EQ(j["b"], "3062260084798443971291013413134039364339691208179185");
  EXPECT_EQ(j["divisors"].size(), 14u);

  j = nlohmann::json::parse(run({"snf", "--alpha", "0", "--graph", "Bw"}).out);
  EXPECT_TRUE(j["singular"].get<bool>());
}

TEST(CliSpectrum, SmallGraphs) {
  auto j = nlohmann::json::parse(run({"spectrum", "--alpha", "0", "--graph", "A_"}).out);
  EXPECT_EQ(j["charpoly"]["graph"], nlohmann::json({"-1", "0", "1"}));
  EXPECT_EQ(j["charpoly"]["complement"], nlohmann::json({"0", "0", "1"}));
  j = nlohmann::json::parse(run({"spectrum", "--alpha", "1/2", "--graph", "@"}).out);
  EXPECT_EQ(j["charpoly"]["graph"], nlohmann::json({"0", "1"}));
}

TEST(CliMates, OrderFour) {
  auto r = run({"mates", "--alpha", "0", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"], 11);
  EXPECT_EQ(j["non_singleton_classes"], 0);
}

TEST(CliVerify, OrderFiveAndLimits) {
  auto r = run({"verify-theorem", "--alpha", "1/2", "--n", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["counterexamples"], 0);
  EXPECT_EQ(run({"verify-theorem", "--alpha", "0", "--n", "9"}).code, dgas::cli::kExitUsage);
  EXPECT_EQ(run({"mates", "--alpha", "0", "--n", "0"}).code, dgas::cli::kExitUsage);
}
