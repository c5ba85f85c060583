// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the dsmin binary as a subprocess and checks its output and exit codes.

#include <sys/wait.h>

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"

namespace dsmin {
namespace {

using ::dsmin::testing::DataPath;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(DSMIN_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Fixtures() {
  return "--f " + DataPath("fixtures/f1.json") + " --g " + DataPath("fixtures/g1.json");
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("dsmin_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, MinimizeFixture) {
  for (const char* alg : {"modmod", "subsup", "supsub"}) {
    const RunResult r = RunCli("minimize " + Fixtures() + " --alg " + alg);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "set={} value=0 cert=LocalMin") << alg;
  }
}

TEST_F(CliTest, MinimizeWritesTrace) {
  const auto trace = dir_ / "trace.json";
  const RunResult r =
      RunCli("minimize --random 8 --seed 3 --alg subsup --epsilon 0.1 --trace " + trace.string());
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(ReadFile(trace));
  EXPECT_EQ(doc["algorithm"], "SubSup");
  EXPECT_FALSE(doc["iterates"].empty());
}

TEST_F(CliTest, MinimizeWithConstraint) {
  const RunResult r = RunCli("minimize " + Fixtures() + " --alg modmod --constraint card=1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("value=0"), std::string::npos);
  EXPECT_EQ(RunCli("minimize " + Fixtures() + " --alg subsup --constraint card=1").exit_code, 1);
}

TEST_F(CliTest, IterationCapExitsTwo) {
  bool saw_cap = false;
  for (int seed = 0; seed < 10 && !saw_cap; ++seed) {
    const RunResult r = RunCli("minimize --random 12 --seed " + std::to_string(seed) +
                            " --alg modmod --max-iterations 1");
    if (r.exit_code == 2) {
      saw_cap = true;
      EXPECT_NE(r.out.find("cert=IterationCap"), std::string::npos);
    } else {
      EXPECT_EQ(r.exit_code, 0);
    }
  }
  EXPECT_TRUE(saw_cap);
}

TEST_F(CliTest, Bounds) {
  RunResult r = RunCli("bounds " + Fixtures());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "lower_bound_1=-0.5 lower_bound_2=-0.5 brute_force=0\n");
  const auto modular = dir_ / "m.json";
  std::ofstream(modular) << R"({"kind": "modular", "params": {"weights": [1, -2, -0.5]}})";
  r = RunCli("bounds --f " + modular.string());
  EXPECT_EQ(r.out, "lower_bound_1=-2.5 lower_bound_2=-2.5 brute_force=-2.5\n");
  r = RunCli("bounds --random 24 --seed 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.find("brute_force"), std::string::npos);
}

TEST_F(CliTest, Decompose) {
  const auto out = dir_ / "split.json";
  const RunResult r = RunCli("decompose " + Fixtures() + " --out " + out.string());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("k_f=1.5,0.5"), std::string::npos);
  EXPECT_NE(r.out.find("k_g=0.5,0.5"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(out));
}

TEST_F(CliTest, BadInputExitsOne) {
  EXPECT_EQ(RunCli("minimize --f /nonexistent.json").exit_code, 1);
  EXPECT_EQ(RunCli("minimize " + Fixtures() + " --alg simplex").exit_code, 1);
  EXPECT_EQ(RunCli("frobnicate").exit_code, 1);
  const auto bad = dir_ / "bad.json";
  std::ofstream(bad) << R"({"path": "x.csv", "folds": 1})";
  EXPECT_EQ(RunCli("featsel --config " + bad.string()).exit_code, 1);
  std::ofstream(dir_ / "broken.json") << "{not json";
  EXPECT_EQ(RunCli("featsel --config " + (dir_ / "broken.json").string()).exit_code, 1);
}

TEST_F(CliTest, FeatselIsByteIdenticalWithSeed) {
  const std::string config = DataPath("fixtures/tiny_config.json");
  const auto a = dir_ / "a.csv";
  const auto b = dir_ / "b.csv";
  ASSERT_EQ(RunCli("featsel --config " + config + " --seed 5 --no-timing --out " + a.string())
                .exit_code,
            0);
  ASSERT_EQ(RunCli("featsel --config " + config + " --seed 5 --no-timing --jobs 2 --out " +
                b.string())
                .exit_code,
            0);
  const std::string csv = ReadFile(a);
  EXPECT_EQ(csv, ReadFile(b));
  // Header plus 4 budgets for each greedy baseline and 3 lambdas per DS procedure.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 4 + 3 * 3);
  const auto j = dir_ / "c.json";
  ASSERT_EQ(RunCli("featsel --config " + config + " --out " + j.string()).exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(ReadFile(j)).size(), 17u);
}

TEST_F(CliTest, SelftestSmallSuites) {
  const RunResult r = RunCli("selftest --check 5 --check 7");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("[PASS] criterion 5"), std::string::npos);
  EXPECT_NE(r.out.find("[PASS] criterion 7"), std::string::npos);
}

}  // namespace
}  // namespace dsmin
