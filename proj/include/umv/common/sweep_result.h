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
#ifndef UMV_COMMON_SWEEP_RESULT_H_
#define UMV_COMMON_SWEEP_RESULT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umv {

// Why a sweep point carries no metrics.
enum class FailureKind {
  kNone,
  kDiverged,        // integration blew up
  kSingular,        // singular mass matrix or factorization
  kUncontrollable,  // effort undefined (rank-deficient Gramian)
  kInvalid,         // the point's design violated a spec invariant
  kOther,
};

std::string_view FailureName(FailureKind kind);

struct SweepAxis {
  std::string name;
  std::vector<double> values;
  // Optional display names, one per value (categorical axes).
  std::vector<std::string> labels;
};

struct SweepPoint {
  std::vector<double> metrics;  // NaN-filled when failed
  FailureKind failure = FailureKind::kNone;
  std::string detail;

  bool ok() const { return failure == FailureKind::kNone; }
};

// A 1-D or 2-D grid of design parameters mapped to scalar metrics. Points are
// stored row-major: the last axis varies fastest.
struct SweepResult {
  std::string study;
  std::vector<SweepAxis> axes;
  std::vector<std::string> metric_names;
  std::vector<SweepPoint> points;
  // Snapshot of the parameters held fixed during the sweep.
  std::vector<std::pair<std::string, std::string>> fixed_parameters;
  // Axis coordinates of a highlighted design (e.g. the selected gear ratios).
  std::optional<std::vector<double>> marked_point;
  std::map<std::string, double> annotations;

  std::size_t grid_size() const;
  std::size_t index(const std::vector<std::size_t>& coords) const;
  std::vector<std::size_t> coords(std::size_t flat_index) const;
  std::size_t metric_index(std::string_view name) const;
  // NaN when the point failed.
  double metric(std::size_t flat_index, std::string_view name) const;
  std::size_t failure_count() const;

  // Throws InvalidSpecError when the point count does not match the grid.
  void check_shape() const;
};

// Creates a result with grid_size() default points, each with metric slots.
SweepResult MakeSweepResult(std::string study, std::vector<SweepAxis> axes,
                            std::vector<std::string> metric_names);

// Marks a point failed and fills its metrics with NaN.
void MarkFailed(SweepPoint& point, FailureKind kind, std::string detail);

// Least-squares slope of y against x over the finite pairs.
double LeastSquaresSlope(const std::vector<double>& x,
                         const std::vector<double>& y);

}  // namespace umv

#endif  // UMV_COMMON_SWEEP_RESULT_H_
