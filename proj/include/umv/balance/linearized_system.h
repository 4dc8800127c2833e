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

#ifndef UMV_BALANCE_LINEARIZED_SYSTEM_H_
#define UMV_BALANCE_LINEARIZED_SYSTEM_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "umv/balance/wheelie_model.h"

namespace umv::balance {

// xdot = A x + B u about an operating point.
struct LinearizedSystem {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  std::vector<std::string> state_names;
  std::vector<std::string> input_names;
  std::optional<WheelieConfig> config;

  int states() const { return static_cast<int>(A.rows()); }
  int inputs() const { return static_cast<int>(B.cols()); }
};

// Throws InvalidSpecError on inconsistent shapes or names, LinearizationError
// on non-finite entries.
void Validate(const LinearizedSystem& sys);

using Dynamics =
    std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

// Central differences of f about (x0, u0). Each coordinate is perturbed by
// eps * max(1, |value|). Throws LinearizationError on a non-finite
// derivative.
LinearizedSystem LinearizeFunction(const Dynamics& f, const Eigen::VectorXd& x0,
                                   const Eigen::VectorXd& u0,
                                   double eps = 1e-6);

// Linearizes the wheelie dynamics about a rest configuration, at its
// holding inputs.
LinearizedSystem Linearize(const WheelieModel& model,
                           const WheelieConfig& config, double eps = 1e-6);

// Plain-text form: a header line, the state and input names, then A and B
// row-major with shortest round-trip numbers. ParseLinearizedSystem reads
// it back exactly and throws InvalidSpecError naming the offending line.
std::string FormatLinearizedSystem(const LinearizedSystem& sys);
LinearizedSystem ParseLinearizedSystem(std::string_view text);

}  // namespace umv::balance

#endif  // UMV_BALANCE_LINEARIZED_SYSTEM_H_
