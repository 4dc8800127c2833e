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

#ifndef UMV_CLI_OUTPUT_H_
#define UMV_CLI_OUTPUT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "umv/common/sweep_result.h"
#include "umv/jump/extension_policy.h"
#include "umv/jump/jump_simulation.h"

namespace umv::cli {

// One row per grid point: axis values (labels for categorical axes), then
// metrics, then "failure" and "detail". Numbers carry at most 9 significant
// digits; failed metrics print as nan.
std::string FormatCsv(const SweepResult& result);

// Line chart for a 1-D sweep, one series per value of the leading axis for a
// 2-D sweep over a categorical or short axis, heat map otherwise (marked
// point drawn as a star). `metric` defaults to the first one. Returns
// nullopt and sets `warning` when no point has a finite value.
std::optional<std::string> RenderSweepSvg(const SweepResult& result,
                                          std::string* warning = nullptr,
                                          const std::string& metric = "");

// h_CoM and h_clearance against time with dashed markers at lift-off and
// apogee.
std::string RenderTraceSvg(const jump::JumpTrace& trace);

// Replayable JSON record of a trace and the policy that produced it.
std::string FormatTraceJson(const jump::JumpTrace& trace,
                            const jump::ExtensionPolicy& policy);

// Writes files into one directory through a temporary name and a rename,
// remembering each one for the manifest.
class OutputWriter {
 public:
  // Creates the directory and probes it. Throws IoError when it is not
  // writable.
  explicit OutputWriter(std::filesystem::path directory);

  void Write(const std::string& name, const std::string& contents);
  const std::vector<std::string>& files() const { return files_; }
  const std::filesystem::path& directory() const { return directory_; }

 private:
  std::filesystem::path directory_;
  std::vector<std::string> files_;
};

}  // namespace umv::cli

#endif  // UMV_CLI_OUTPUT_H_
