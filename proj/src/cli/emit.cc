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

#include <algorithm>
#include <fstream>
#include <system_error>

#include "json.hpp"
#include "umv/cli/config.h"
#include "umv/cli/output.h"

namespace umv::cli {

namespace fs = std::filesystem;

namespace {

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

OutputWriter::OutputWriter(fs::path directory) : directory_(std::move(directory)) {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec || !fs::is_directory(directory_)) {
    throw IoError("cannot create output directory '" + directory_.string() +
                  "'" + (ec ? ": " + ec.message() : ""));
  }
  const fs::path probe = directory_ / ".umv-write-probe";
  WriteFile(probe, "");
  fs::remove(probe, ec);
}

void OutputWriter::Write(const std::string& name, const std::string& contents) {
  const fs::path target = directory_ / name;
  const fs::path temp = directory_ / ("." + name + ".tmp");
  WriteFile(temp, contents);
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw IoError("cannot rename into '" + target.string() + "'");
  }
  if (std::find(files_.begin(), files_.end(), name) == files_.end()) {
    files_.push_back(name);
  }
}

std::string FormatTraceJson(const jump::JumpTrace& trace,
                            const jump::ExtensionPolicy& policy) {
  using Json = nlohmann::ordered_json;
  Json samples = Json::array();
  for (const auto& s : trace.samples) {
    Json row = Json::array({s.state.time});
    for (int i = 0; i < 5; ++i) row.push_back(s.state.q[i]);
    for (int i = 0; i < 5; ++i) row.push_back(s.state.v[i]);
    row.push_back(s.contacts.rear_in_contact ? 1 : 0);
    row.push_back(s.contacts.front_in_contact ? 1 : 0);
    row.push_back(s.torques.mu);
    row.push_back(s.torques.qh);
    row.push_back(s.observables.h_com);
    row.push_back(s.observables.h_clearance);
    row.push_back(s.com_vz);
    samples.push_back(std::move(row));
  }
  const Json j{
      {"format", "umv-jump-trace"},
      {"version", 1},
      {"t0", trace.t0},
      {"t_liftoff", trace.t_liftoff},
      {"t_apogee", trace.t_apogee},
      {"lifted_off", trace.lifted_off},
      {"policy",
       Json{{"mode", std::string(jump::ModeName(policy.mode))},
            {"crouch", Json::array({policy.crouch.mu, policy.crouch.qh})},
            {"extend", Json::array({policy.extend.mu, policy.extend.qh})},
            {"trigger_time", policy.trigger_time},
            {"ramp_duration", policy.ramp_duration},
            {"flight", std::string(jump::FlightModeName(policy.flight))}}},
      {"fields",
       {"t", "x", "z", "pitch", "mu", "qh", "x_rate", "z_rate", "pitch_rate",
        "mu_rate", "qh_rate", "rear_contact", "front_contact", "tau_mu",
        "tau_qh", "h_com", "h_clearance", "com_vz"}},
      {"samples", samples}};
  return j.dump() + "\n";
}

}  // namespace umv::cli
