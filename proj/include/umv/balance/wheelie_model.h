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
#ifndef UMV_BALANCE_WHEELIE_MODEL_H_
#define UMV_BALANCE_WHEELIE_MODEL_H_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "umv/core/morphology.h"
#include "umv/core/multibody.h"

namespace umv::balance {

// Rear-wheel balance model. The rear contact is a frictionless ball pivot at
// the world origin; yaw is omitted. Coordinates, in order:
//   roll   about the world x axis (forward) through the contact
//   pitch  about the contact, positive lifting the front (planar convention)
//   wheel  rear wheel spin relative to the Bike
//   mu     Neck angle relative to the Bike
//   phi    out-of-plane joint between the Bike and mu
//   q_h    Head angle relative to the Neck
//   zeta   optional extra out-of-plane joint between the Neck and the Head
// Every coordinate but roll and pitch is actuated.
struct WheelieModel {
  core::MorphologySpec morphology;
  // Angle of the phi axis in the Bike sagittal plane, from the Bike x axis
  // toward its z axis.
  double psi_hat = 0.0;
  // Angle of the extra joint axis in the Neck sagittal plane. Unset for the
  // 5-DoF robot.
  std::optional<double> zeta_hat;
  double wheel_inertia = 0.02;  // kg m^2 about the spin axis
  // A point on the phi axis relative to the rear axle in the Bike frame
  // (x forward, z up). Defaults to a third of the wheelbase ahead of the
  // axle and one wheel diameter above it.
  std::optional<Eigen::Vector2d> phi_pivot;
  double gravity = 9.81;
};

enum WheelieCoord : int {
  kRoll = 0,
  kPitch = 1,
  kWheel = 2,
  kMu = 3,
  kPhi = 4,
  kQh = 5,
  kZeta = 6,
};
inline constexpr int kUnactuated = 2;  // roll and pitch lead the coordinates

// Throws InvalidSpecError on a bad morphology, psi_hat or zeta_hat outside
// [-pi/2, pi/2], a non-positive wheel inertia or gravity, or a prismatic mu.
void Validate(const WheelieModel& model);

int CoordinateCount(const WheelieModel& model);  // 6 or 7
int InputCount(const WheelieModel& model);       // CoordinateCount - 2
std::vector<std::string> CoordinateNames(const WheelieModel& model);
// Positions then velocities ("roll", ..., "roll_rate", ...).
std::vector<std::string> StateNames(const WheelieModel& model);
std::vector<std::string> InputNames(const WheelieModel& model);

// Resolved phi pivot relative to the rear axle.
Eigen::Vector2d PhiPivot(const WheelieModel& model);

// Angle in [-pi/2, pi/2] of the line through the phi pivot and the rear
// axle, measured like psi_hat. An axis at this angle intersects the axle.
double AxleIntersectingPsi(const WheelieModel& model);

// Distance between two axis angles, modulo pi (an axis and its reverse are
// the same line).
double AxisAngleDistance(double a, double b);

// Multibody realization of the model, with its bodies permuted into
// coordinate order on every call.
class WheelieDynamics {
 public:
  explicit WheelieDynamics(const WheelieModel& model);

  const WheelieModel& model() const { return model_; }
  int coordinates() const { return n_; }
  int inputs() const { return n_ - kUnactuated; }

  Eigen::Vector3d CenterOfMass(const Eigen::VectorXd& q) const;
  // Generalized forces that hold q at rest against gravity.
  Eigen::VectorXd GravityForces(const Eigen::VectorXd& q) const;
  Eigen::MatrixXd MassMatrix(const Eigen::VectorXd& q) const;
  // qdd for actuated-joint inputs u (wheel, mu, phi, q_h[, zeta]). Throws
  // NumericalSingularityError on a singular mass matrix.
  Eigen::VectorXd Accelerations(const Eigen::VectorXd& q,
                                const Eigen::VectorXd& qd,
                                const Eigen::VectorXd& u) const;
  // State derivative for x = (q, qd).
  Eigen::VectorXd Derivative(const Eigen::VectorXd& x,
                             const Eigen::VectorXd& u) const;
  double Energy(const Eigen::VectorXd& x) const;

 private:
  Eigen::VectorXd ToTree(const Eigen::VectorXd& coords) const;
  Eigen::VectorXd FromTree(const Eigen::VectorXd& tree) const;

  WheelieModel model_;
  int n_ = 0;
  core::Multibody body_;
  std::vector<int> tree_of_coord_;  // coordinate index -> tree index
};

// Free-function form of WheelieDynamics::Derivative.
Eigen::VectorXd WheelieForwardDynamics(const WheelieModel& model,
                                       const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& u);

// A rest configuration with the whole-body CoM above the contact.
struct WheelieConfig {
  Eigen::VectorXd q;         // coordinate values
  Eigen::VectorXd u;         // holding inputs
  Eigen::Vector3d contact = Eigen::Vector3d::Zero();
  double com_offset = 0.0;   // horizontal CoM distance from the contact, m
};

struct StaticConfigSearch {
  std::vector<WheelieConfig> configs;
  std::vector<std::string> diagnostics;  // one line per rejected grid cell
};

// For every (pitch, q_h) grid pair, root-finds mu so the CoM sits above the
// contact, with roll, phi and zeta at zero. Cells without a root inside the
// mu limits, or whose pose leaves a joint limit, are reported in the
// diagnostics. Throws InvalidSpecError on an empty grid.
StaticConfigSearch FindStaticConfigs(const WheelieModel& model,
                                     const std::vector<double>& pitches,
                                     const std::vector<double>& qh_values);

// `count` configurations at q_h = qh, evenly spread in pitch over the
// feasible window found on a fine pitch scan. Throws InvalidSpecError if
// fewer than `count` pitches are feasible.
std::vector<WheelieConfig> DefaultWheelieConfigs(const WheelieModel& model,
                                                 int count = 5,
                                                 double qh = 1.0);

// Re-expresses configurations of one model for another that differs only in
// the extra joint (zeta set to zero or dropped) and recomputes the holding
// inputs.
std::vector<WheelieConfig> AdaptConfigs(const WheelieModel& target,
                                        const std::vector<WheelieConfig>& configs);

}  // namespace umv::balance

#endif  // UMV_BALANCE_WHEELIE_MODEL_H_
