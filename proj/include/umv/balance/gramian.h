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

#ifndef UMV_BALANCE_GRAMIAN_H_
#define UMV_BALANCE_GRAMIAN_H_

#include <functional>

#include <Eigen/Core>

#include "umv/balance/linearized_system.h"

namespace umv::balance {

// Default horizon for the effort metric, s.
inline constexpr double kDefaultHorizon = 2.0;
inline constexpr int kDefaultGramianSteps = 2000;
// Eigenvalues below this fraction of the largest count as rank loss.
inline constexpr double kRankTolerance = 1e-10;

// e^{A t}.
Eigen::MatrixXd MatrixExp(const Eigen::MatrixXd& a, double t = 1.0);

// W(T) = int_0^T e^{At} B B^T e^{A^T t} dt from Wdot = AW + WA^T + BB^T,
// W(0) = 0, by fixed-step RK4, symmetrized. Throws InvalidSpecError unless
// T > 0 and steps > 0; HorizonOverflowError when W overflows.
Eigen::MatrixXd FiniteHorizonGramian(const LinearizedSystem& sys, double T,
                                     int steps = kDefaultGramianSteps);

// W(T) kept in a growth-normalized form for systems with unstable modes.
// A is split into invariant subspaces, x = P z with z = (z_u, z_s), where
// A_u holds the eigenvalues with real part above 1/T. The core
// G = E W_z E^T with E = blockdiag(e^{-A_u T}, I) follows the same matrix ODE
// in those coordinates and stays well scaled however fast the unstable
// modes grow, so W^-1 = P^-T E^T G^-1 E P^-1 is available to full precision
// without ever forming W.
struct FactoredGramian {
  Eigen::MatrixXd basis;          // P
  Eigen::MatrixXd basis_inverse;  // P^-1
  int unstable = 0;               // dimension of z_u
  Eigen::MatrixXd decay;          // E(T)
  Eigen::MatrixXd core;           // G
  double horizon = 0.0;

  // W(T). Throws HorizonOverflowError if it overflows.
  Eigen::MatrixXd Dense() const;
};

// Same preconditions and step count as FiniteHorizonGramian.
FactoredGramian FactorGramian(const LinearizedSystem& sys, double T,
                              int steps = kDefaultGramianSteps);

// d^T W^-1 d for d = x_f - e^{AT} x_s, through the eigen-decomposition of W.
// Returns +infinity when d has a component along a direction W does not
// reach (rank tolerance above). Throws NumericalSingularityError when W is
// indefinite beyond round-off.
double MinControlEnergy(const Eigen::MatrixXd& W, const Eigen::VectorXd& x_s,
                        const Eigen::VectorXd& x_f, const LinearizedSystem& sys,
                        double T);

// trace(W^-1) / n: the mean minimum energy over unit-norm targets reached
// from rest. +infinity when W is rank deficient.
double LocalEffortMetric(const Eigen::MatrixXd& W);
// The same from the factored form; the rank test applies to the core G.
double LocalEffortMetric(const FactoredGramian& gramian);
// Evaluated through FactorGramian.
double LocalEffortMetric(const LinearizedSystem& sys,
                         double T = kDefaultHorizon,
                         int steps = kDefaultGramianSteps);

// The minimum-energy open-loop input u*(t) = B^T e^{A^T (T - t)} W^-1 d.
// Throws NumericalSingularityError when W is not invertible.
std::function<Eigen::VectorXd(double)> OptimalInput(
    const Eigen::MatrixXd& W, const Eigen::VectorXd& x_s,
    const Eigen::VectorXd& x_f, const LinearizedSystem& sys, double T);

}  // namespace umv::balance

#endif  // UMV_BALANCE_GRAMIAN_H_
