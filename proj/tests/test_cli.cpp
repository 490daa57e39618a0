#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "negsphere/serialize.hpp"

#ifndef NEGSPHERE_CLI
#error "NEGSPHERE_CLI must name the CLI binary"
#endif

namespace negsphere {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr merged into stdout.
CliRun run(const std::string& args) {
  const std::string cmd = std::string(NEGSPHERE_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("negsphere_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, Formula) {
  const CliRun r = run("formula 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("s(2) = -86"), std::string::npos) << r.out;
}

TEST(Cli, FormulaReportsPrintedDiscrepancy) {
  const CliRun r = run("formula 5 --json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("s_construction"), -221);
  EXPECT_EQ(j.at("s_formula_printed").at("num"), -217);
  EXPECT_FALSE(j.at("agrees").get<bool>());
}

TEST(Cli, SearchE2OneBlowup) {
  const CliRun r = run("search 2 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("best square -92"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("IV"), std::string::npos) << r.out;
}

TEST(Cli, SearchJsonRoundTrips) {
  const CliRun r = run("search 6 3 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("best_square"), -279);
  EXPECT_EQ(j.at("provenance"), "paper_verified");
  const FibrationSpec spec = spec_from_json(j.at("spec"));
  const BlowupPlan plan = plan_from_json(j.at("plan"));
  const Realization again = realize(spec, plan);
  EXPECT_EQ(again.square, -279);
  EXPECT_EQ(again.graph, graph_from_json(j.at("graph")));
}

TEST(Cli, SearchWithoutSolution) {
  const CliRun r = run("search 2 0 --allowed E8t --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).at("solution").is_null());
}

TEST(Cli, BuildEulerMismatch) {
  const std::string path =
      temp_file("bad.json", R"({"n": 2, "fibers": ["E8t", "E8t", "E6t", "I0star"]})");
  const CliRun r = run("build " + path);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("euler sum 34 ≠ 24"), std::string::npos) << r.out;
}

TEST(Cli, BuildWithPlanAndDot) {
  const std::string spec = temp_file(
      "k3.json", R"({"n": 2, "fibers": ["E8t", "E8t", "IV"],
                     "plan": {"choices": ["use", "use", "resolve"]}})");
  const auto dot = std::filesystem::temp_directory_path() / "negsphere_cli_k3.dot";
  const CliRun r = run("build " + spec + " --json --dot " + dot.string());
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out).at("square"), -92);
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.rfind("graph plumbing {", 0), 0u);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run("formula 1").code, 2);
  EXPECT_EQ(run("search 2 -1").code, 2);
  EXPECT_EQ(run("search 2 0 --allowed E7t").code, 2);
  EXPECT_EQ(run("search 2 0 --allowed Foo").code, 2);
  EXPECT_EQ(run("conjecture --n-range 5:3").code, 2);
  EXPECT_EQ(run("build /nonexistent/spec.json").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, VerifyBatteryPasses) {
  const CliRun r = run("verify-paper");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, ConjectureGrid) {
  const CliRun r = run("conjecture --n-range 2:4 --k-range 0:3 --json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.at("all_satisfy_C5").get<bool>());
  EXPECT_EQ(j.at("rows").size(), 12u);
}

TEST(Cli, CatalogJson) {
  const CliRun r = run("catalog --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), catalog_json());
}

}  // namespace
}  // namespace negsphere
