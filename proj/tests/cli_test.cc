// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "pipround/instance.h"
#include "pipround/instance_io.h"
#include "pipround/generators.h"

namespace pipround::cli {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pipround");
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("pipround_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenMisComplete) {
  const CliRun r = Cli({"gen", "--kind", "mis", "--graph", "k", "6", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const PipInstance inst = ParseInstanceJson(r.out);
  EXPECT_EQ(inst.num_cols(), 6);
  EXPECT_EQ(inst.num_rows(), 6);
  const NormalizedInstance norm = Normalize(inst);
  EXPECT_DOUBLE_EQ(norm.width, 1.0);
  EXPECT_NEAR(norm.delta1, 1.0 + 5.0 / 6.0, 1e-12);
  EXPECT_EQ(json::parse(r.out)["meta"]["kind"], "mis");
}

TEST_F(CliTest, GenIsReproducible) {
  const CliRun a = Cli({"gen", "--kind", "random", "--n", "9", "--m", "3", "--seed", "5"});
  const CliRun b = Cli({"gen", "--kind", "random", "--n", "9", "--m", "3", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, SolvePicksStrongAtWidthThree) {
  WriteInstanceFile(Path("w3.json"), RandomInstance(12, 4, 3.0, 0.5, 2), MatrixLayout::kSparse);
  const CliRun r = Cli({"solve", "--input", Path("w3.json"), "--trials", "200", "--seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["regime"], "strong");
  EXPECT_EQ(doc["heuristic"], false);
  EXPECT_EQ(doc["trials"], 200);
  EXPECT_EQ(doc["seed"], 3);
  EXPECT_LE(doc["value"].get<double>(), doc["lpOpt"].get<double>() + 1e-7);
  std::vector<uint8_t> x;
  for (int v : doc["x"]) x.push_back(static_cast<uint8_t>(v));
  EXPECT_TRUE(ReadInstanceFile(Path("w3.json")).IsFeasible(std::span<const uint8_t>(x)));
}

TEST_F(CliTest, SolveWidthOneIsHardnessExit) {
  WriteInstanceFile(Path("k4.json"), MisToPip(CompleteGraph(4)), MatrixLayout::kDense);
  const CliRun r = Cli({"solve", "--input", Path("k4.json"), "--seed", "1"});
  EXPECT_EQ(r.code, kExitHardness);
  EXPECT_NE(r.err.find("independent set"), std::string::npos);
  const CliRun forced =
      Cli({"solve", "--input", Path("k4.json"), "--seed", "1", "--force-heuristic"});
  ASSERT_EQ(forced.code, kExitOk) << forced.err;
  EXPECT_EQ(json::parse(forced.out)["heuristic"], true);
}

TEST_F(CliTest, UsageErrors) {
  WriteInstanceFile(Path("w2.json"), RandomInstance(5, 2, 2.0, 0.5, 2), MatrixLayout::kDense);
  EXPECT_EQ(Cli({"solve", "--input", Path("w2.json"), "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", "--input", Path("missing.json")}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", "--input", Path("w2.json"), "--regime", "fast"}).code, kExitUsage);
  EXPECT_EQ(Cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, SeedIsReportedWhenDrawn) {
  WriteInstanceFile(Path("w2.json"), RandomInstance(5, 2, 2.0, 0.5, 2), MatrixLayout::kDense);
  const CliRun r = Cli({"solve", "--input", Path("w2.json"), "--trials", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("seed: "), std::string::npos);
}

TEST_F(CliTest, VerifyBounds) {
  const CliRun r = Cli({"verify-bounds", "--seed", "2026", "--draws", "50", "--samples", "5000"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, OracleOnIntegralLp) {
  // Every item fits at once, so the LP optimum is integral.
  WriteInstanceFile(Path("easy.json"),
                    PipInstance::FromDense({1, 2, 3}, {{0.5, 0.5, 1}}, {2}),
                    MatrixLayout::kDense);
  const CliRun r = Cli({"oracle", "--input", Path("easy.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["value"].get<double>(), 6.0);
  EXPECT_NEAR(doc["lpOpt"].get<double>(), doc["value"].get<double>(), 1e-9);
}

TEST_F(CliTest, GenSolveRoundTrip) {
  const CliRun g = Cli({"gen", "--kind", "sparse", "--n", "40", "--m", "8", "--width", "4",
                     "--column-nnz", "2", "--seed", "9", "--out", Path("s.json")});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  const CliRun s = Cli({"solve", "--input", Path("s.json"), "--seed", "1", "--trials", "100",
                     "--mode", "isolated", "--threads", "2", "--trials-csv",
                     Path("t.csv"), "--dump-basis", Path("b.txt")});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  const json doc = json::parse(s.out);
  std::vector<uint8_t> x;
  for (int v : doc["x"]) x.push_back(static_cast<uint8_t>(v));
  EXPECT_TRUE(ReadInstanceFile(Path("s.json")).IsFeasible(std::span<const uint8_t>(x)));
  EXPECT_TRUE(std::filesystem::exists(Path("t.csv")));
  EXPECT_TRUE(std::filesystem::exists(Path("b.txt")));
}

TEST_F(CliTest, ExperimentIsDeterministic) {
  {
    std::ofstream spec(Path("spec.json"));
    spec << R"({"trials": 30, "instances": [{"kind": "random", "n": 8, "m": 3}]})";
  }
  const std::vector<std::string> args{"experiment", "--spec", Path("spec.json"),
                                      "--seed", "7", "--deterministic"};
  const CliRun a = Cli(args);
  const CliRun b = Cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("cell,instance,", 0), 0u);
}

}  // namespace
}  // namespace pipround::cli
