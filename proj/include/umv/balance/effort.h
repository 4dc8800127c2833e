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

#ifndef UMV_BALANCE_EFFORT_H_
#define UMV_BALANCE_EFFORT_H_

#include <string>
#include <vector>

#include "umv/balance/gramian.h"
#include "umv/balance/wheelie_model.h"
#include "umv/common/sweep_result.h"

namespace umv::balance {

struct EffortOptions {
  double horizon = kDefaultHorizon;  // s
  int steps = kDefaultGramianSteps;
  double eps = 1e-6;                 // linearization perturbation
  int workers = 1;
};

struct EffortResult {
  // Per configuration, in input order. NaN where the configuration failed.
  std::vector<double> xi_local;
  std::vector<FailureKind> failures;
  std::vector<std::string> details;
  double xi_aggregate = 0.0;
  double horizon = kDefaultHorizon;

  int defined_count() const;
};

// Sum of the finite entries, added in ascending order so any permutation of
// the input gives the same bits.
double SumDefined(std::vector<double> values);

// Linearizes every configuration and sums the local efforts. Rank-deficient
// configurations are marked uncontrollable and left out of the sum. Throws
// InvalidSpecError on an empty list and AggregateUndefinedError when every
// configuration fails.
EffortResult AggregateEffort(const WheelieModel& model,
                             const std::vector<WheelieConfig>& configs,
                             const EffortOptions& options = {});

}  // namespace umv::balance

#endif  // UMV_BALANCE_EFFORT_H_
