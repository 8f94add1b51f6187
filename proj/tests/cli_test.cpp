#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "cli.hpp"
#include "qmod/quiver_json.hpp"
#include "qmod/torus_knot.hpp"

namespace qmod::cli {
namespace {

using nlohmann::json;

RunResult run_args(std::vector<std::string> args) { return main_entry(args); }

TEST(ParseIntList, Values) {
  EXPECT_EQ(parse_int_list("1,-2,3"), (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(parse_int_list("7"), (std::vector<int>{7}));
  EXPECT_THROW(parse_int_list(""), UsageError);
  EXPECT_THROW(parse_int_list("1,,2"), UsageError);
  EXPECT_THROW(parse_int_list("1,x"), UsageError);
}

TEST(ParseArgs, StableCommand) {
  const Command c = parse_args({"stable", "--preset", "kronecker:3", "--theta", "-2,1", "--alpha", "1,2"});
  EXPECT_EQ(c.subcommand, "stable");
  EXPECT_EQ(c.preset, "kronecker:3");
  EXPECT_EQ(c.theta, (std::vector<int>{-2, 1}));
  EXPECT_EQ(c.alpha, (std::vector<int>{1, 2}));
  EXPECT_FALSE(c.json);
}

TEST(ParseArgs, LocalQuiverParts) {
  const Command c = parse_args({"local-quiver", "--preset", "kronecker:3", "--part", "2:1,1", "--part", "1:0,1"});
  ASSERT_EQ(c.parts.size(), 2u);
  EXPECT_EQ(c.parts[0].first, 2);
  EXPECT_EQ(c.parts[0].second, (std::vector<int>{1, 1}));
  EXPECT_EQ(c.parts[1].first, 1);
}

TEST(ParseArgs, Errors) {
  EXPECT_THROW(parse_args({}), UsageError);
  EXPECT_THROW(parse_args({"frobnicate"}), UsageError);
  EXPECT_THROW(parse_args({"stable", "--preset", "kronecker:3", "--theta", "a,b", "--alpha", "1,2"}), UsageError);
  EXPECT_THROW(parse_args({"simple", "--alpha", "1,2"}), UsageError);
  EXPECT_THROW(parse_args({"simple", "--preset", "kronecker:3", "--quiver", "x.json", "--alpha", "1,2"}),
               UsageError);
}

TEST(Run, StableExample) {
  const RunResult r = run_args({"stable", "--preset", "kronecker:3", "--theta", "-2,1", "--alpha", "1,2"});
  EXPECT_EQ(r.exit_code, kExitYes);
  EXPECT_EQ(r.out, "STABLE\n");
}

TEST(Run, DecisionNoExitsOne) {
  const RunResult r = run_args({"stable", "--preset", "kronecker:3", "--theta", "-1,1", "--alpha", "2,1"});
  EXPECT_EQ(r.exit_code, kExitNo);
  EXPECT_EQ(r.out, "NOT STABLE\n");
  EXPECT_EQ(run_args({"simple", "--preset", "kronecker:3", "--alpha", "1,1"}).exit_code, kExitNo);
  EXPECT_EQ(run_args({"simple", "--preset", "cyclic:3", "--alpha", "1,1,1"}).exit_code, kExitYes);
}

TEST(Run, MissingThetaIsError) {
  const RunResult r = run_args({"stable", "--preset", "kronecker:3", "--alpha", "1,2"});
  EXPECT_EQ(r.exit_code, kExitError);
  EXPECT_FALSE(r.err.empty());
}

TEST(Run, MissingFileIsError) {
  const RunResult r = run_args({"simple", "--quiver", "/nonexistent/q.json", "--alpha", "1"});
  EXPECT_EQ(r.exit_code, kExitError);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Run, HelpExitsZero) {
  const RunResult r = run_args({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(r.out.empty());
}

TEST(Run, TorusKnotViolation) {
  const RunResult r = run_args({"torus-knot", "2", "2", "--a", "2,0", "--b", "1,1"});
  EXPECT_EQ(r.exit_code, kExitNo);
  EXPECT_NE(r.out.find("violated: a_1 + b_1 = 3 > n = 2"), std::string::npos);
  EXPECT_NE(r.err.find("coprime"), std::string::npos);
}

TEST(Run, TorusKnotStableCoprimeHasNoWarning) {
  const RunResult r = run_args({"torus-knot", "2", "3", "--a", "1,1", "--b", "1,1,0"});
  EXPECT_EQ(r.exit_code, kExitYes);
  EXPECT_TRUE(r.err.empty());
}

TEST(Run, ModuliDimAndEnumerate) {
  const RunResult m = run_args({"moduli-dim", "--preset", "kronecker:3", "--theta", "-1,1", "--alpha", "2,2"});
  EXPECT_EQ(m.exit_code, 0);
  EXPECT_EQ(m.out, "5\n");
  const RunResult e =
      run_args({"enumerate", "--preset", "kronecker:3", "--theta", "-1,1", "--max-total", "6", "--json"});
  EXPECT_EQ(e.exit_code, 0);
  const json j = json::parse(e.out);
  EXPECT_EQ(j["data"]["stable"], json::parse("[[1,1],[2,2],[3,3]]"));
}

TEST(Run, JsonModeShape) {
  const RunResult r =
      run_args({"semistable", "--preset", "kronecker:3", "--theta", "-1,1", "--alpha", "1,1", "--json"});
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "yes");
  EXPECT_TRUE(j.contains("data"));

  const RunResult bad = run_args({"stable", "--preset", "kronecker:3", "--theta", "1", "--alpha", "1,2", "--json"});
  EXPECT_EQ(bad.exit_code, kExitError);
  EXPECT_EQ(json::parse(bad.out)["verdict"], "error");
}

TEST(Run, LocalQuiverJsonRoundTrips) {
  const RunResult r = run_args({"local-quiver", "--preset", "kronecker:3", "--part", "1:1,1", "--part", "1:2,2",
                                "--theta", "-1,1", "--json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  const QuiverFile f = parse_quiver_json(j["data"]["quiver"].dump());
  EXPECT_EQ(f.quiver.num_vertices(), 2);
  ASSERT_TRUE(f.dims.has_value());
  EXPECT_EQ(*f.dims, (DimVector{1, 1}));
  EXPECT_TRUE(j["data"].contains("stable"));
}

TEST(Run, GammaJsonRoundTrips) {
  const RunResult r = run_args({"gamma", "2", "3"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(parse_quiver_json(r.out).quiver, build_gamma(2, 3));
}

TEST(Run, QuiverFileInput) {
  const auto path = std::filesystem::temp_directory_path() / "qmod_cli_test_quiver.json";
  {
    std::ofstream f(path);
    f << R"({"vertices": 2, "arrows": [[0,1],[0,1],[0,1]]})";
  }
  const RunResult r = run_args({"stable", "--quiver", path.string(), "--theta", "-2,1", "--alpha", "1,2"});
  std::filesystem::remove(path);
  EXPECT_EQ(r.exit_code, kExitYes) << r.err;
}

TEST(Run, OracleReport) {
  const RunResult r = run_args({"oracle-simple", "--preset", "kronecker:3", "--alpha", "1,1", "--trials", "5",
                                "--json"});
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "probably_no");
  EXPECT_EQ(j["data"]["trial_span_dims"].size(), 5u);
  EXPECT_EQ(j["data"]["modulus"], 1009);

  const RunResult k = run_args({"oracle-knot", "2", "3", "--a", "1,1", "--b", "1,1,0"});
  EXPECT_EQ(k.exit_code, 0);
  EXPECT_NE(k.out.find("verdict: yes"), std::string::npos);
}

TEST(Run, ByteIdenticalAcrossRuns) {
  const std::vector<std::string> args = {"oracle-simple", "--preset", "bipartite:2:2", "--alpha", "1,1,1,1",
                                         "--seed", "17", "--json"};
  EXPECT_EQ(run_args(args).out, run_args(args).out);
}

}  // namespace
}  // namespace qmod::cli
