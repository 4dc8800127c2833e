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

#include "umv/balance/effort.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "umv/balance/linearized_system.h"
#include "umv/common/errors.h"
#include "umv/common/parallel.h"

namespace umv::balance {

int EffortResult::defined_count() const {
  return static_cast<int>(
      std::count(failures.begin(), failures.end(), FailureKind::kNone));
}

double SumDefined(std::vector<double> values) {
  std::erase_if(values, [](double v) { return !std::isfinite(v); });
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

EffortResult AggregateEffort(const WheelieModel& model,
                             const std::vector<WheelieConfig>& configs,
                             const EffortOptions& options) {
  if (configs.empty()) throw InvalidSpecError("configuration list is empty");
  Validate(model);
  const std::size_t n = configs.size();
  EffortResult out;
  out.horizon = options.horizon;
  out.xi_local.assign(n, std::numeric_limits<double>::quiet_NaN());
  out.failures.assign(n, FailureKind::kNone);
  out.details.assign(n, "");
  ParallelFor(n, options.workers, [&](std::size_t i) {
    try {
      const LinearizedSystem sys = Linearize(model, configs[i], options.eps);
      const double xi =
          LocalEffortMetric(sys, options.horizon, options.steps);
      if (std::isinf(xi)) {
        out.failures[i] = FailureKind::kUncontrollable;
        out.details[i] = "Gramian is rank deficient";
      } else {
        out.xi_local[i] = xi;
      }
    } catch (const HorizonOverflowError& e) {
      out.failures[i] = FailureKind::kDiverged;
      out.details[i] = e.what();
    } catch (const NumericalSingularityError& e) {
      out.failures[i] = FailureKind::kSingular;
      out.details[i] = e.what();
    } catch (const LinearizationError& e) {
      out.failures[i] = FailureKind::kSingular;
      out.details[i] = e.what();
    } catch (const InvalidSpecError& e) {
      out.failures[i] = FailureKind::kInvalid;
      out.details[i] = e.what();
    }
  });
  if (out.defined_count() == 0) {
    throw AggregateUndefinedError("effort undefined at every configuration: " +
                                  out.details.front());
  }
  out.xi_aggregate = SumDefined(out.xi_local);
  return out;
}

}  // namespace umv::balance
