#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "run_tool.hpp"

using nlohmann::json;
using testing_support::fixture;
using testing_support::run_tool;

namespace {

json parse_report(const std::string& out) {
  json j = json::parse(out);
  j.erase("wall_time");
  return j;
}

}  // namespace

TEST(Cli, TransformOfDictator) {
  const auto r = run_tool("transform --input " + fixture("dictator.fn"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "transform");
  EXPECT_TRUE(j.contains("wall_time"));
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, HexInputMatchesAnd) {
  const auto r = run_tool("influence --input " + fixture("and2_hex.fn"));
  ASSERT_EQ(r.exit_code, 0) << r.out;
  const json j = json::parse(r.out);
  // AND of two fair bits: each coordinate is pivotal with probability 1/2.
  EXPECT_NEAR(j["result"]["coordinate_influences"][0].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(j["result"]["total_influence"].get<double>(), 1.0, 1e-15);
}

TEST(Cli, SeededBatchIsDeterministic) {
  for (const std::string args : {"verify-es --seed 7 --count 6", "verify-inv --seed 7 --count 6",
                                 "verify-threshold --seed 7 --pairs 3 --max-n 5"}) {
    const auto a = run_tool(args), b = run_tool(args);
    ASSERT_EQ(a.exit_code, 0) << args;
    EXPECT_EQ(parse_report(a.out), parse_report(b.out)) << args;
    EXPECT_EQ(json::parse(a.out)["seed"], 7);
  }
}

TEST(Cli, ViolationFixtureExitsOne) {
  // A constant function meets the hypercontractive bound with equality, so a strict margin fails.
  const auto r = run_tool("verify-hc --input " + fixture("constant.fn") + " --tol -1e-3");
  EXPECT_EQ(r.exit_code, 1);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["violations"].empty());
  EXPECT_TRUE(j["violations"][0].contains("replay"));
}

TEST(Cli, ReplayReproducesViolations) {
  const std::string path = ::testing::TempDir() + "bcube_violation.json";
  const auto first = run_tool("verify-hc --input " + fixture("constant.fn") + " --tol -1e-3 --output " + path);
  ASSERT_EQ(first.exit_code, 1);
  const auto again = run_tool("--replay " + path);
  EXPECT_EQ(again.exit_code, 1) << again.out;
  std::remove(path.c_str());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_tool("").exit_code, 2);
  EXPECT_EQ(run_tool("bogus").exit_code, 2);
  EXPECT_EQ(run_tool("transform").exit_code, 2);
  EXPECT_EQ(run_tool("transform --input /nonexistent/file.fn").exit_code, 2);
  EXPECT_EQ(run_tool("families teleport --graph-spec path:2").exit_code, 2);
  EXPECT_EQ(run_tool("transform --input " + fixture("dictator.fn") + " --format xml").exit_code, 2);
}

TEST(Cli, MalformedInputReportsLine) {
  const std::string path = ::testing::TempDir() + "bcube_bad.fn";
  std::ofstream(path) << "2 0.5\n1 0 1\n";
  const auto r = run_tool("transform --input " + path);
  EXPECT_EQ(r.exit_code, 2);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.contains("error"));
  std::remove(path.c_str());
}

TEST(Cli, BudgetExceededExitsThree) {
  const auto r = run_tool("families turan --graph-spec matching:3 --n 9 --k 3");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "budget_exceeded");
}

TEST(Cli, TuranAndCoverValues) {
  auto r = run_tool("families turan --graph-spec matching:2 --n 5 --k 2");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["result"]["value"], 4);
  r = run_tool("families cover --graph " + fixture("triangle.hg"));
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["result"]["tau"], 2);
  EXPECT_EQ(j["result"]["cc"], 2);
}

TEST(Cli, FamilyCommands) {
  const auto r = run_tool("families pseudo --input " + fixture("star5.fam") + " --a 1 --eps 0.1");
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_FALSE(json::parse(r.out)["result"]["uncapturable"].get<bool>());
  EXPECT_EQ(run_tool("families shadow --input " + fixture("star5.fam") + " --ell 1").exit_code, 0);
  EXPECT_EQ(run_tool("families expand --graph " + fixture("matching2.hg") + " --k 3").exit_code, 0);
}

TEST(Cli, TextFormat) {
  const auto r = run_tool("families cover --graph-spec complete:3 --format text");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("families"), std::string::npos);
  EXPECT_FALSE(json::accept(r.out));
}

TEST(Cli, RandomVariableInputs) {
  const auto r = run_tool("verify-inv --x " + fixture("rademacher2.rv") + " --y " + fixture("rademacher2.rv") +
                          " --degree 2 --seed 1");
  EXPECT_EQ(r.exit_code, 0) << r.out;
}
