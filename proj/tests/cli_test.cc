// Copyright 2026 The batchbandit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "batchbandit/io.h"

namespace batchbandit {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "batchbandit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / name).string();
}

TEST(CliTest, GridPrintsMinimaxTimes) {
  const Result r = Invoke({"grid", "--kind", "minimax", "--T", "500", "--M", "2",
                        "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("\"times\":[100,500]"));
  EXPECT_THAT(r.err, HasSubstr("warning: minimax"));
}

TEST(CliTest, GlobalFlagsBeforeSubcommand) {
  const Result r = Invoke({"--format", "csv", "grid", "--kind", "arithmetic",
                        "--T", "12", "--M", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "kind,T,M,a,truncated,m,t\n"
            "arithmetic,12,3,,false,1,4\n"
            "arithmetic,12,3,,false,2,8\n"
            "arithmetic,12,3,,false,3,12\n");
  EXPECT_EQ(r.err, "");
}

TEST(CliTest, UnknownFlagIsRejectedWithUsage) {
  const Result r = Invoke({"grid", "--kind", "minimax", "--T", "500", "--M", "2",
                        "--bogus"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_THAT(r.err, HasSubstr("--bogus"));
  EXPECT_THAT(r.err, HasSubstr("Usage"));
}

TEST(CliTest, MissingSubcommand) {
  EXPECT_EQ(Invoke({}).code, kExitConfigError);
}

TEST(CliTest, HelpExitsZero) {
  const Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("simulate"));
}

TEST(CliTest, GridConstructionErrorIsConfigError) {
  const Result r = Invoke({"grid", "--kind", "arithmetic", "--T", "12", "--M", "13"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_THAT(r.err, HasSubstr("outside [2, T]"));
}

TEST(CliTest, SimulateMissingConfigFile) {
  const Result r = Invoke({"simulate", "--config", "/nonexistent/config.json"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_THAT(r.err, HasSubstr("/nonexistent/config.json"));
}

TEST(CliTest, SimulateFromFlagsAndFileAgree) {
  const std::string config_path = TempPath("cli_config.json");
  ASSERT_TRUE(WriteFile(config_path, R"({
    "T_list": [1000, 2000], "M": 3, "grid_kinds": ["geometric"],
    "baselines": ["ucb2"], "replications": 10, "master_seed": 5
  })").ok());
  const Result from_file = Invoke({"simulate", "--config", config_path});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  const Result from_flags =
      Invoke({"simulate", "--T", "1000", "2000", "--M", "3", "--grids",
           "geometric", "--baselines", "ucb2", "--reps", "10", "--seed", "5"});
  ASSERT_EQ(from_flags.code, kExitOk) << from_flags.err;
  EXPECT_EQ(from_file.out, from_flags.out);
  EXPECT_THAT(from_file.out, StartsWith("policy,grid_kind,T,M,"));

  // --seed overrides master_seed from the file.
  const Result reseeded =
      Invoke({"simulate", "--config", config_path, "--seed", "6"});
  EXPECT_NE(reseeded.out, from_file.out);
}

TEST(CliTest, SimulateBadConfigValue) {
  const std::string config_path = TempPath("cli_bad_config.json");
  ASSERT_TRUE(
      WriteFile(config_path, R"({"T_list": [1000], "grid_kinds": ["minimax"],
                                 "replications": 0})").ok());
  const Result r = Invoke({"simulate", "--config", config_path});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_THAT(r.err, HasSubstr("replications"));
  EXPECT_EQ(Invoke({"simulate", "--config", config_path, "--M", "3"}).code,
            kExitConfigError);
}

TEST(CliTest, SimulateWritesOutFile) {
  const std::string out_path = TempPath("cli_out.json");
  const Result r = Invoke({"simulate", "--T", "1000", "--grids", "minimax",
                        "--reps", "5", "--out", out_path, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "");
  absl::StatusOr<std::string> text = ReadFile(out_path);
  ASSERT_TRUE(text.ok());
  absl::StatusOr<RegretTable> table = RegretTableFromJson(*text);
  ASSERT_TRUE(table.ok());
  EXPECT_EQ(table->rows.size(), 1u);
}

TEST(CliTest, VerifyMaximal) {
  const Result r = Invoke({"verify", "--check", "maximal", "--delta", "0.1",
                        "--tau", "1000", "--reps", "10000", "--seed", "7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, StartsWith("check,frequency,bound,sigma,hits,trials,pass\n"
                                "maximal,"));
  EXPECT_THAT(r.out, HasSubstr(",true\n"));
}

TEST(CliTest, VerifyFailureExitsTwo) {
  // The bounds hold, so demand a margin of 100 sigmas below the bound:
  // error ~ 0.24 against e^{-1/8} - 100 * 0.01 < 0.
  const Result r = Invoke({"verify", "--check", "go_for_broke", "--t", "2",
                        "--gap", "1", "--reps", "1000", "--sigmas", "-100"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_THAT(r.out, HasSubstr(",false\n"));
}

TEST(CliTest, VerifyPreconditionIsConfigError) {
  const Result r = Invoke({"verify", "--check", "test_error", "--T", "10000",
                        "--t", "512", "--gap", "0.1"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_THAT(r.err, HasSubstr("separation level"));
}

TEST(CliTest, BoundsCurvesAndSummary) {
  const Result curves = Invoke({"bounds", "--T", "4096", "--M", "2", "--grids",
                             "minimax", "--mesh-size", "8"});
  ASSERT_EQ(curves.code, kExitOk) << curves.err;
  EXPECT_THAT(curves.out, StartsWith("delta,value,bound_kind,grid_kind,T,M\n"));
  EXPECT_EQ(std::count(curves.out.begin(), curves.out.end(), '\n'), 1 + 16);

  const Result summary = Invoke({"bounds", "--T", "4096", "--M", "2", "--grids",
                              "minimax", "--summary"});
  ASSERT_EQ(summary.code, kExitOk) << summary.err;
  EXPECT_THAT(summary.out, HasSubstr("rate_excess,,,4096,2,2048\n"));
  EXPECT_THAT(summary.out, HasSubstr("rate_competitive_ratio,,,4096,2,64\n"));
  EXPECT_THAT(summary.out, HasSubstr("rate_maximum,,,4096,2,256\n"));
  EXPECT_THAT(summary.out, HasSubstr("maximum,minimax,prop1_upper,4096,2,"));
}

TEST(CliTest, BoundsEmpirical) {
  const Result r = Invoke({"bounds", "--T", "1000", "--M", "3", "--grids",
                        "geometric", "--kinds", "prop1_upper", "--mesh-size",
                        "3", "--empirical-reps", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("\"bound_kind\": \"empirical\""));
}

TEST(CliTest, SweepIsDeterministic) {
  const std::vector<std::string> args = {"sweep", "--reps", "3", "--T", "5000",
                                         "10000", "--seed", "11"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  // Three grids and UCB2 at two horizons, plus the header.
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 9);
}

}  // namespace
}  // namespace batchbandit
