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

#include <string>

#include "umv/cli/output.h"
#include "umv/common/number_format.h"

namespace umv::cli {
namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Header names and labels are plain identifiers; quote anything else.
std::string Cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  return Quote(s);
}

}  // namespace

std::string FormatCsv(const SweepResult& r) {
  r.check_shape();
  std::string out;
  for (const auto& axis : r.axes) out += Cell(axis.name) + ",";
  for (const auto& name : r.metric_names) out += Cell(name) + ",";
  out += "failure,detail\n";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto coords = r.coords(i);
    for (std::size_t a = 0; a < r.axes.size(); ++a) {
      const SweepAxis& axis = r.axes[a];
      out += axis.labels.empty() ? FormatSignificant(axis.values[coords[a]], 9)
                                 : Cell(axis.labels[coords[a]]);
      out += ',';
    }
    const SweepPoint& p = r.points[i];
    for (double v : p.metrics) out += FormatSignificant(v, 9) + ",";
    out += std::string(FailureName(p.failure)) + "," + Quote(p.detail) + "\n";
  }
  return out;
}

}  // namespace umv::cli
