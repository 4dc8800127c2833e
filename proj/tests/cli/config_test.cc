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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "umv/cli/config.h"

namespace umv::cli {
namespace {

std::string ReadText(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ConfigTest, EmptyObjectGivesDefaults) {
  const auto c = ParseConfig("{}", "jump");
  ExperimentConfig expected;
  expected.study = "jump";
  EXPECT_EQ(c, expected);
  EXPECT_EQ(c.morphology, core::NominalMorphology());
  EXPECT_EQ(c.simulation.dt, 1e-4);
}

TEST(ConfigTest, StudyNameMustBeKnownAndConsistent) {
  EXPECT_EQ(ParseConfig(R"({"study": "sweep-gear"})").study, "sweep-gear");
  EXPECT_THROW(ParseConfig(R"({"study": "sweep-gear"})", "jump"),
               ConfigValueError);
  EXPECT_THROW(ParseConfig(R"({"study": "fly"})"), ConfigValueError);
  EXPECT_THROW(ParseConfig("{}"), ConfigValueError);
}

TEST(ConfigTest, ShippedMorphologyIsTheNominalOne) {
  const auto path =
      std::filesystem::path(UMV_SOURCE_DIR) / "config" / "default_morphology.json";
  EXPECT_EQ(ParseMorphology(ReadText(path)), core::NominalMorphology());
  const auto c = ParseConfig(R"({"morphology": "default_morphology.json"})",
                             "jump", "<test>", path.parent_path().string());
  EXPECT_EQ(c.morphology, core::NominalMorphology());
}

TEST(ConfigTest, BadValueNamesItsKey) {
  try {
    ParseConfig(R"({"simulation": {"dt": -0.001}})", "jump");
    FAIL() << "negative dt accepted";
  } catch (const ConfigValueError& e) {
    EXPECT_EQ(e.key(), "simulation.dt");
  }
  try {
    ParseConfig(R"({"simulation": {"dt": "fast"}})", "jump");
    FAIL() << "string dt accepted";
  } catch (const ConfigValueError& e) {
    EXPECT_EQ(e.key(), "simulation.dt");
  }
}

TEST(ConfigTest, UnknownKeysAreRejected) {
  try {
    ParseConfig(R"({"simulation": {"dtt": 0.001}})", "jump");
    FAIL() << "unknown key accepted";
  } catch (const ConfigValueError& e) {
    EXPECT_EQ(e.key(), "simulation.dtt");
  }
  EXPECT_THROW(ParseConfig(R"({"colour": "red"})", "jump"), ConfigValueError);
}

TEST(ConfigTest, MorphologyInvariantsAreChecked) {
  EXPECT_THROW(ParseConfig(R"({"morphology": {"links": {"head": {"mass": -1}}}})",
                           "jump"),
               ConfigValueError);
}

TEST(ConfigTest, PostureOutsideLimitsIsRejected) {
  EXPECT_THROW(ParseConfig(R"({"jump": {"search": {"crouch": [[0.55, 9.0]]}}})",
                           "jump"),
               ConfigValueError);
}

TEST(ConfigTest, ParseErrorCarriesLineAndColumn) {
  try {
    ParseConfig("{\n  \"seed\": 3,\n  \"simulation\": {\"dt\": }\n}", "jump");
    FAIL() << "malformed text accepted";
  } catch (const ConfigParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(ConfigTest, EmitParseRoundTrip) {
  auto c = ParseConfig(R"({
    "study": {"name": "sweep-scale", "scales": [0.1, 0.2], "drives": ["coupled"],
              "gear_ratio": null},
    "seed": 42,
    "simulation": {"dt": 2e-4, "friction_coefficient": 0.8},
    "jump": {"timeout": 1.5, "search": {"modes": ["pd_tracked_ramp"],
             "ramp_durations": [0.05, 0.1], "flight": "relax"}},
    "balance": {"psi_hat": 0.5, "phi_pivot": [0.1, 0.2], "config_count": 3},
    "output": {"directory": "somewhere", "formats": ["csv"]}
  })");
  EXPECT_EQ(c.seed, 42);
  EXPECT_FALSE(c.scale.gear_ratio);
  EXPECT_EQ(c.search.flight, jump::FlightMode::kRelax);
  const std::string text = EmitConfig(c);
  const auto back = ParseConfig(text);
  EXPECT_EQ(back, c);
  EXPECT_EQ(EmitConfig(back), text);
}

TEST(ConfigTest, MorphologyRoundTrip) {
  auto m = core::NominalMorphology();
  m.head.mass = 13.25;
  m.qh_actuator.count = 1;
  EXPECT_EQ(ParseMorphology(EmitMorphology(m)), m);
}

TEST(ConfigTest, HashIsStableAndSensitive) {
  // Published FNV-1a 64 test vectors.
  EXPECT_EQ(Fnv1aHex(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1aHex("a"), "af63dc4c8601ec8c");
  const auto a = ParseConfig("{}", "jump");
  const auto b = ParseConfig(R"({"seed": 0, "simulation": {}})", "jump");
  EXPECT_EQ(ConfigHash(a), ConfigHash(b));
  EXPECT_EQ(ConfigHash(a).size(), 16u);
  const auto c = ParseConfig(R"({"seed": 1})", "jump");
  EXPECT_NE(ConfigHash(a), ConfigHash(c));
}

TEST(ConfigTest, ShippedExamplesParse) {
  const auto dir = std::filesystem::path(UMV_SOURCE_DIR) / "config" / "examples";
  int count = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() != ".json") continue;
    SCOPED_TRACE(e.path().string());
    EXPECT_NO_THROW(LoadConfig(e.path().string()));
    ++count;
  }
  EXPECT_EQ(count, 6);
}

TEST(ConfigTest, MissingFileIsAnIoError) {
  EXPECT_THROW(LoadConfig("/nonexistent/config.json", "jump"), IoError);
}

}  // namespace
}  // namespace umv::cli
