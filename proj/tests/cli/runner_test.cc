// Copyright 2026 The UMV Design Toolkit Authors
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

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "umv/cli/config.h"
#include "umv/cli/runner.h"

namespace umv::cli {
namespace {

namespace fs = std::filesystem;

fs::path FreshDir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("umv_runner_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string ReadText(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig SmallMassSweep(const fs::path& out) {
  auto c = ParseConfig(
      R"({"study": {"name": "sweep-mass", "links": ["neck"], "points": 3}})");
  c.output.directory = out.string();
  return c;
}

int RunBinary(const std::string& args) {
  const std::string cmd =
      std::string(UMV_DESIGN_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(RunnerTest, JumpRunWritesEverythingListedInTheManifest) {
  const auto dir = FreshDir("jump");
  auto c = ParseConfig("{}", "jump");
  c.output.directory = dir.string();
  const auto report = cli::Run(c);
  EXPECT_EQ(report.exit_code, kExitOk);
  const auto manifest = nlohmann::json::parse(ReadText(dir / "manifest.json"));
  std::set<std::string> listed, present;
  for (const auto& f : manifest.at("files")) listed.insert(f.get<std::string>());
  for (const auto& e : fs::directory_iterator(dir)) {
    present.insert(e.path().filename().string());
  }
  EXPECT_EQ(listed, present);
  EXPECT_EQ(listed, (std::set<std::string>{"trace.json", "plot.svg", "results.csv",
                                           "config.json", "manifest.json"}));
  EXPECT_EQ(manifest.at("config_hash"), ConfigHash(c));
  EXPECT_EQ(manifest.at("study"), "jump");
  // The copied config reproduces the hash.
  EXPECT_EQ(ConfigHash(ParseConfig(ReadText(dir / "config.json"))),
            ConfigHash(c));
  fs::remove_all(dir);
}

TEST(RunnerTest, UnwritableDirectoryFailsBeforeComputing) {
  const auto dir = FreshDir("blocked");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  auto c = ParseConfig(R"({"study": "sweep-gear"})");
  c.output.directory = (dir / "file" / "out").string();
  const auto start = std::chrono::steady_clock::now();
  EXPECT_THROW(cli::Run(c), IoError);
  // The full gear landscape takes seconds; failing must not.
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
  fs::remove_all(dir);
}

TEST(RunnerTest, WorkerCountGivesByteIdenticalResults) {
  const auto a = FreshDir("w1"), b = FreshDir("w3");
  RunOptions one, three;
  three.workers = 3;
  cli::Run(SmallMassSweep(a), one);
  cli::Run(SmallMassSweep(b), three);
  EXPECT_EQ(ReadText(a / "results.csv"), ReadText(b / "results.csv"));
  EXPECT_EQ(ReadText(a / "plot.svg"), ReadText(b / "plot.svg"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(RunnerTest, StrictModeReportsFailedPoints) {
  const auto dir = FreshDir("strict");
  auto c = SmallMassSweep(dir);
  c.simulation.dt = 0.005;
  c.simulation.contact_stiffness = 1e9;  // explicit contact blows up
  RunOptions lenient, strict;
  strict.strict = true;
  const auto r1 = cli::Run(c, lenient);
  EXPECT_EQ(r1.exit_code, kExitOk);
  EXPECT_EQ(r1.failures, 3u);
  EXPECT_FALSE(fs::exists(dir / "plot.svg"));
  EXPECT_FALSE(r1.warnings.empty());
  const auto r2 = cli::Run(c, strict);
  EXPECT_EQ(r2.exit_code, kExitPointsFailed);
  const auto manifest = nlohmann::json::parse(ReadText(dir / "manifest.json"));
  EXPECT_EQ(manifest.at("failures").at("failed"), 3);
  fs::remove_all(dir);
}

TEST(RunnerTest, BalanceStudiesProduceTables) {
  auto c = ParseConfig(
      R"({"study": {"name": "balance-psi", "psi_points": 3},
          "balance": {"config_count": 2}})");
  const auto psi = ComputeSweep(c);
  EXPECT_EQ(psi.points.size(), 3u);
  EXPECT_TRUE(psi.annotations.contains("psi_star_rad"));
  c.study = "balance-dof";
  const auto dof = ComputeSweep(c);
  EXPECT_EQ(dof.points.size(), 2u);
  EXPECT_TRUE(dof.annotations.contains("xi_ratio"));
}

TEST(RunnerTest, BinaryExitCodes) {
  const auto dir = FreshDir("binary");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.json") << "{\"study\": \"jump\", \"simulation\": {\"dt\": -1}}";
  std::ofstream(dir / "broken.json") << "{\"seed\": ";
  std::ofstream(dir / "ok.json") << "{\"study\": \"jump\", \"output\": {\"directory\": \""
                                 << (dir / "out").string() << "\"}}";
  std::ofstream(dir / "file") << "x";
  std::ofstream(dir / "io.json") << "{\"output\": {\"directory\": \""
                                 << (dir / "file" / "out").string() << "\"}}";
  EXPECT_EQ(RunBinary("validate --config " + (dir / "ok.json").string()), 0);
  EXPECT_EQ(RunBinary("validate --config " + (dir / "bad.json").string()), 2);
  EXPECT_EQ(RunBinary("jump --config " + (dir / "broken.json").string()), 2);
  EXPECT_EQ(RunBinary("jump --config " + (dir / "io.json").string()), 3);
  EXPECT_EQ(RunBinary("jump --config " + (dir / "ok.json").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "out" / "manifest.json"));
  EXPECT_NE(RunBinary("no-such-command"), 0);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace umv::cli
