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

#ifndef UMV_CLI_CONFIG_H_
#define UMV_CLI_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "umv/balance/effort.h"
#include "umv/common/errors.h"
#include "umv/core/morphology.h"
#include "umv/core/planar_dynamics.h"
#include "umv/jump/extension_policy.h"
#include "umv/jump/jump_simulation.h"
#include "umv/jump/studies.h"

namespace umv::cli {

// Malformed config text. The message carries the line and column.
class ConfigParseError : public Error {
 public:
  ConfigParseError(std::string source, int line, int column,
                   const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed config with a bad or unknown key. key() is the dotted path,
// e.g. "simulation.dt".
class ConfigValueError : public InvalidSpecError {
 public:
  ConfigValueError(std::string key, const std::string& what);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

inline constexpr std::string_view kStudies[] = {
    "jump",       "sweep-mass",  "sweep-gear", "sweep-scale",
    "balance-psi", "balance-dof"};

struct MassStudyParams {
  std::vector<core::LinkId> links = {core::LinkId::kBike, core::LinkId::kNeck,
                                     core::LinkId::kHead};
  double span_kg = 2.0;  // deltas cover [-span, +span]
  int points = 9;

  bool operator==(const MassStudyParams&) const = default;
};

struct GearStudyParams {
  int points = 15;
  double half_octaves = 2.0;

  bool operator==(const GearStudyParams&) const = default;
};

struct ScaleStudyParams {
  std::vector<double> scales = jump::LinearGrid(0.10, 0.30, 9);
  std::vector<jump::QhDrive> drives = {jump::QhDrive::kSingle,
                                       jump::QhDrive::kCoupled};
  std::optional<double> gear_ratio = 9.0;  // null keeps the installed ratios

  bool operator==(const ScaleStudyParams&) const = default;
};

struct BalanceParams {
  std::optional<double> psi_hat;  // unset: the axle-intersecting angle
  double wheel_inertia = 0.02;
  std::optional<Eigen::Vector2d> phi_pivot;
  double horizon = balance::kDefaultHorizon;
  int steps = balance::kDefaultGramianSteps;
  double eps = 1e-6;
  int config_count = 5;
  double config_qh = 1.0;
  int psi_points = 37;
  double zeta_hat = 1.5707963267948966;

  bool operator==(const BalanceParams&) const = default;
};

struct OutputParams {
  std::string directory = "out";
  std::vector<std::string> formats = {"csv", "svg", "json"};

  bool wants(std::string_view format) const;
  bool operator==(const OutputParams&) const = default;
};

struct ExperimentConfig {
  std::string study;
  core::MorphologySpec morphology = core::NominalMorphology();
  core::SimConfig simulation;
  jump::JumpOptions jump;
  jump::ExtensionSearchSpace search = jump::DefaultSearchSpace();
  MassStudyParams mass;
  GearStudyParams gear;
  ScaleStudyParams scale;
  BalanceParams balance;
  OutputParams output;
  std::int64_t seed = 0;

  bool operator==(const ExperimentConfig&) const = default;
};

// Parses JSON config text. `study` fills in a missing study name and must
// match one that is present. `base_dir` resolves a morphology given as a
// file path. Every key is checked; defaults fill what is absent.
ExperimentConfig ParseConfig(std::string_view text,
                             std::optional<std::string> study = std::nullopt,
                             const std::string& source = "<config>",
                             const std::string& base_dir = ".");
// Reads and parses a file. Throws IoError when it cannot be read.
ExperimentConfig LoadConfig(const std::string& path,
                            std::optional<std::string> study = std::nullopt);

// Canonical text of a config with every default spelled out. Parsing it
// gives back an equal config.
std::string EmitConfig(const ExperimentConfig& config);

// Morphology section alone, in the same format as the config.
std::string EmitMorphology(const core::MorphologySpec& m);
core::MorphologySpec ParseMorphology(std::string_view text,
                                     const std::string& source = "<morphology>");

// 64-bit FNV-1a of EmitConfig(config), as 16 hex digits.
std::string ConfigHash(const ExperimentConfig& config);
std::string Fnv1aHex(std::string_view bytes);

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace umv::cli

#endif  // UMV_CLI_CONFIG_H_
