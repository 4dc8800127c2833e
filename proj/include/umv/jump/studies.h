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
#ifndef UMV_JUMP_STUDIES_H_
#define UMV_JUMP_STUDIES_H_

#include <optional>
#include <string>
#include <vector>

#include "umv/common/sweep_result.h"
#include "umv/core/morphology.h"
#include "umv/core/planar_dynamics.h"
#include "umv/jump/extension_policy.h"
#include "umv/jump/jump_simulation.h"

namespace umv::jump {

struct StudyOptions {
  ExtensionSearchSpace space = DefaultSearchSpace();
  JumpOptions jump;
  int workers = 1;
};

// Metric columns shared by every jump sweep.
const std::vector<std::string>& JumpMetricNames();

// Optimizes the extension profile for one design and returns its metrics;
// the building block of every sweep point.
JumpMetrics EvaluateDesign(const core::MorphologySpec& m,
                           const core::SimConfig& cfg,
                           const StudyOptions& options);

// Varies one link's mass (geometry fixed, inertia from the cylinder model)
// while the other links keep their nominal values.
SweepResult MassSensitivitySweep(const core::MorphologySpec& m,
                                 core::LinkId link,
                                 const std::vector<double>& masses,
                                 const core::SimConfig& cfg,
                                 const StudyOptions& options = {});

// Mass sweeps of several links stacked on a leading categorical "link" axis
// (labelled with the link names) against "mass_delta_kg", the offset from
// each link's nominal mass. Adds a "mass_kg" metric column and the
// least-squares slope of max_h_com_m against mass per link as the
// "slope_<link>_m_per_kg" annotations.
SweepResult MassSensitivityStudy(const core::MorphologySpec& m,
                                 const std::vector<core::LinkId>& links,
                                 const std::vector<double>& deltas,
                                 const core::SimConfig& cfg,
                                 const StudyOptions& options = {});

// 2-D landscape over the gear ratios of mu (alpha) and q_h (beta). Each
// point re-derives torque and speed limits from the fixed motor-side limits
// and the reflected inertia from the new ratio. The nominal ratios are
// reported as the marked point.
SweepResult GearRatioLandscape(const core::MorphologySpec& m,
                               const std::vector<double>& gr_alpha,
                               const std::vector<double>& gr_beta,
                               const core::SimConfig& cfg,
                               const StudyOptions& options = {});

// `points` ratios spaced geometrically around `nominal` (which is the middle
// entry, bit-exact) spanning factors 2^(+/- half_octaves).
std::vector<double> GearGrid(double nominal, int points = 15,
                             double half_octaves = 2.0);

enum class QhDrive { kSingle, kCoupled };
std::string_view DriveName(QhDrive drive);

// Gross-scale study. `scales` are absolute (1.0 == 1 m Neck); the design is
// rebuilt from `m` at each scale with the q_h actuator count set by
// `drive`. When gear_ratio is set both joints are re-geared to it.
SweepResult ScaleStudy(const core::MorphologySpec& m,
                       const std::vector<double>& scales, QhDrive drive,
                       const core::SimConfig& cfg,
                       const StudyOptions& options = {},
                       std::optional<double> gear_ratio = 9.0);

// Runs ScaleStudy for each drive and stacks them on a leading "qh_count" axis.
SweepResult ScaleStudyComparison(const core::MorphologySpec& m,
                                 const std::vector<double>& scales,
                                 const std::vector<QhDrive>& drives,
                                 const core::SimConfig& cfg,
                                 const StudyOptions& options = {},
                                 std::optional<double> gear_ratio = 9.0);

std::vector<double> LinearGrid(double lo, double hi, int points);

}  // namespace umv::jump

#endif  // UMV_JUMP_STUDIES_H_
