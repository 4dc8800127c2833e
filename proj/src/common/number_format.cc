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

#include "umv/common/number_format.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

namespace umv {

namespace {

std::string NonFinite(double v) {
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string FormatShortest(double v) {
  if (!std::isfinite(v)) return NonFinite(v);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string FormatSignificant(double v, int digits) {
  if (!std::isfinite(v)) return NonFinite(v);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::scientific, digits - 1);
  double rounded = 0.0;
  std::from_chars(buf, res.ptr, rounded);
  if (rounded == 0.0) rounded = 0.0;  // drop the sign of -0
  res = std::to_chars(buf, buf + sizeof(buf), rounded);
  return std::string(buf, res.ptr);
}

bool ParseDouble(std::string_view text, double& out) {
  if (text == "nan") {
    out = std::numeric_limits<double>::quiet_NaN();
    return true;
  }
  if (text == "inf" || text == "-inf") {
    out = text[0] == '-' ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
    return true;
  }
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, out);
  return res.ec == std::errc() && res.ptr == end && !text.empty();
}

}  // namespace umv
