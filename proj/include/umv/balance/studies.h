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

#ifndef UMV_BALANCE_STUDIES_H_
#define UMV_BALANCE_STUDIES_H_

#include <optional>
#include <vector>

#include "umv/balance/effort.h"
#include "umv/balance/wheelie_model.h"
#include "umv/common/sweep_result.h"

namespace umv::balance {

// Aggregate effort for each phi axis angle. The configurations stay fixed:
// with phi at zero the axis angle does not move the equilibrium. Reports
// AxleIntersectingPsi as the "psi_star_rad" annotation and marked point.
// Points where every configuration fails are marked failed.
SweepResult PsiSweep(const WheelieModel& model,
                     const std::vector<double>& psi_grid,
                     const std::vector<WheelieConfig>& configs,
                     const EffortOptions& options = {});

// Grid angle with the lowest aggregate among the points where every one of
// `config_count` configurations was defined. Partially defined sums leave
// out their hardest configurations and are not comparable. nullopt when no
// point qualifies.
std::optional<double> PsiArgmin(const SweepResult& sweep, int config_count);

// `points` angles evenly covering [-pi/2, pi/2], end points included.
std::vector<double> PsiGrid(int points = 37);

struct DofComparison {
  EffortResult five;  // without the extra joint
  EffortResult six;   // with it
  double ratio = 0.0;  // six.xi_aggregate / five.xi_aggregate
};

// Compares `model` without and with the extra joint at `zeta_hat`, at the
// same configurations (the 6-DoF copies get zeta = 0).
DofComparison CompareDofs(const WheelieModel& model, double zeta_hat,
                          const std::vector<WheelieConfig>& configs,
                          const EffortOptions& options = {});

// Two-row table (axis "dofs" = 5, 6) of a comparison, with the ratio as the
// "xi_ratio" annotation.
SweepResult DofComparisonTable(const DofComparison& cmp, double zeta_hat);

// Extra joint placement used by the default comparison: a Head lean axis
// perpendicular to the Neck.
inline constexpr double kDefaultZetaHat = 1.5707963267948966;

}  // namespace umv::balance

#endif  // UMV_BALANCE_STUDIES_H_
