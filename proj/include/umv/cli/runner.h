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

#ifndef UMV_CLI_RUNNER_H_
#define UMV_CLI_RUNNER_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "umv/balance/wheelie_model.h"
#include "umv/cli/config.h"
#include "umv/common/sweep_result.h"
#include "umv/jump/extension_policy.h"
#include "umv/jump/jump_simulation.h"

namespace umv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPointsFailed = 1;  // only with --strict
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitCompute = 4;

struct RunOptions {
  int workers = 1;
  bool strict = false;
  std::ostream* log = nullptr;  // warnings; silent when null
};

struct RunReport {
  int exit_code = kExitOk;
  std::string directory;
  std::vector<std::string> files;  // as listed in the manifest
  std::size_t failures = 0;
  std::vector<std::string> warnings;
};

struct JumpRun {
  jump::ExtensionPolicy policy;
  jump::JumpMetrics metrics;
  jump::JumpTrace trace;
  SweepResult table;  // one row
};

// The study computations, without any file output.
JumpRun ComputeJump(const ExperimentConfig& config);
SweepResult ComputeSweep(const ExperimentConfig& config, int workers = 1);

// Wheelie model and configurations described by the balance section.
balance::WheelieModel BalanceModel(const ExperimentConfig& config);
std::vector<balance::WheelieConfig> BalanceConfigs(
    const ExperimentConfig& config, const balance::WheelieModel& model);

// Runs the study and writes the outputs and manifest.json into
// config.output.directory. Throws IoError before computing anything when
// the directory cannot be written.
RunReport Run(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace umv::cli

#endif  // UMV_CLI_RUNNER_H_
