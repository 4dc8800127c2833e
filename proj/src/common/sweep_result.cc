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
#include "umv/common/sweep_result.h"

#include <cmath>
#include <limits>

#include "umv/common/errors.h"

namespace umv {

std::string_view FailureName(FailureKind kind) {
  switch (kind) {
    case FailureKind::kNone:
      return "";
    case FailureKind::kDiverged:
      return "diverged";
    case FailureKind::kSingular:
      return "singular";
    case FailureKind::kUncontrollable:
      return "uncontrollable";
    case FailureKind::kInvalid:
      return "invalid";
    case FailureKind::kOther:
      return "error";
  }
  return "error";
}

std::size_t SweepResult::grid_size() const {
  std::size_t n = axes.empty() ? 0 : 1;
  for (const auto& axis : axes) n *= axis.values.size();
  return n;
}

std::size_t SweepResult::index(const std::vector<std::size_t>& c) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    flat = flat * axes[a].values.size() + c.at(a);
  }
  return flat;
}

std::vector<std::size_t> SweepResult::coords(std::size_t flat) const {
  std::vector<std::size_t> c(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    c[a] = flat % axes[a].values.size();
    flat /= axes[a].values.size();
  }
  return c;
}

std::size_t SweepResult::metric_index(std::string_view name) const {
  for (std::size_t i = 0; i < metric_names.size(); ++i) {
    if (metric_names[i] == name) return i;
  }
  throw InvalidSpecError("unknown sweep metric '" + std::string(name) + "'");
}

double SweepResult::metric(std::size_t flat, std::string_view name) const {
  const SweepPoint& p = points.at(flat);
  if (!p.ok()) return std::numeric_limits<double>::quiet_NaN();
  return p.metrics.at(metric_index(name));
}

std::size_t SweepResult::failure_count() const {
  std::size_t n = 0;
  for (const auto& p : points) n += p.ok() ? 0 : 1;
  return n;
}

void SweepResult::check_shape() const {
  if (points.size() != grid_size()) {
    throw InvalidSpecError("sweep '" + study + "' has " +
                           std::to_string(points.size()) +
                           " points for a grid of " +
                           std::to_string(grid_size()));
  }
  for (const auto& p : points) {
    if (p.metrics.size() != metric_names.size()) {
      throw InvalidSpecError("sweep point metric count mismatch");
    }
  }
}

SweepResult MakeSweepResult(std::string study, std::vector<SweepAxis> axes,
                            std::vector<std::string> metric_names) {
  SweepResult r;
  r.study = std::move(study);
  r.axes = std::move(axes);
  r.metric_names = std::move(metric_names);
  for (const auto& axis : r.axes) {
    if (axis.values.empty()) {
      throw InvalidSpecError("sweep axis '" + axis.name + "' is empty");
    }
    if (!axis.labels.empty() && axis.labels.size() != axis.values.size()) {
      throw InvalidSpecError("sweep axis '" + axis.name +
                             "' has a label count mismatch");
    }
  }
  r.points.assign(r.grid_size(), SweepPoint{});
  for (auto& p : r.points) p.metrics.assign(r.metric_names.size(), 0.0);
  return r;
}

void MarkFailed(SweepPoint& point, FailureKind kind, std::string detail) {
  point.failure = kind;
  point.detail = std::move(detail);
  for (double& m : point.metrics) m = std::numeric_limits<double>::quiet_NaN();
}

double LeastSquaresSlope(const std::vector<double>& x,
                         const std::vector<double>& y) {
  double sx = 0, sy = 0, n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
    sx += x[i];
    sy += y[i];
    n += 1;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace umv
