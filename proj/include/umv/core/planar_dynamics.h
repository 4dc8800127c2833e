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
#ifndef UMV_CORE_PLANAR_DYNAMICS_H_
#define UMV_CORE_PLANAR_DYNAMICS_H_

#include <array>
#include <utility>

#include <Eigen/Core>

#include "umv/core/morphology.h"

namespace umv::core {

// Generalized coordinates of the sagittal model. Angles are measured
// counter-clockwise in the x (forward) / z (up) plane, so positive pitch
// lifts the front wheel.
enum Coord : int { kX = 0, kZ = 1, kPitch = 2, kMu = 3, kQh = 4 };
inline constexpr int kPlanarDofs = 5;
inline constexpr int kBaseDofs = 3;

using Vec5 = Eigen::Matrix<double, kPlanarDofs, 1>;
using Mat5 = Eigen::Matrix<double, kPlanarDofs, kPlanarDofs>;

// Joint-space pair (mu, q_h).
struct JointPair {
  double mu = 0.0;
  double qh = 0.0;

  bool operator==(const JointPair&) const = default;
};

struct PlanarState {
  Vec5 q = Vec5::Zero();  // x, z, pitch of the Bike frame; mu; q_h
  Vec5 v = Vec5::Zero();
  double time = 0.0;

  Eigen::Vector3d base_pose() const { return q.head<3>(); }
  Eigen::Vector3d base_vel() const { return v.head<3>(); }
  JointPair joint_pos() const { return {q[kMu], q[kQh]}; }
  JointPair joint_vel() const { return {v[kMu], v[kQh]}; }
};

struct ContactReport {
  bool rear_in_contact = false;
  bool front_in_contact = false;
  std::array<double, 2> normal_forces{0.0, 0.0};      // N; rear, front
  std::array<double, 2> tangential_forces{0.0, 0.0};  // N; rear, front

  bool any_contact() const { return rear_in_contact || front_in_contact; }
};

struct SimConfig {
  double dt = 1e-4;
  double gravity = 9.81;
  double friction_coefficient = 1.0;
  double contact_stiffness = 1e5;
  double contact_damping = 1e3;
  // Holds mu and q_h rigid (the chain moves as one body).
  bool lock_joints = false;

  bool operator==(const SimConfig&) const = default;
};

void Validate(const SimConfig& cfg);

// Mass matrix including reflected rotor inertia on the two actuated joints.
Mat5 MassMatrix(const MorphologySpec& m, const Vec5& q);

// Velocity-product plus gravity terms h(q, v) in M qdd + h = tau + Jc^T f.
Vec5 BiasForces(const MorphologySpec& m, const Vec5& q, const Vec5& v,
                double gravity);

// Contact forces of the compliant ground at z = 0 for the given state.
ContactReport ComputeContacts(const MorphologySpec& m, const PlanarState& s,
                              const SimConfig& cfg);

// Generalized accelerations for joint torques (mu, q_h) that are already
// envelope-clamped and the given contact forces. Throws
// NumericalSingularityError if the mass matrix is not positive definite.
Vec5 ForwardDynamicsPlanar(const MorphologySpec& m, const PlanarState& s,
                           const JointPair& torques,
                           const ContactReport& contacts,
                           const SimConfig& cfg);

// Semi-implicit Euler step with penalty contact and hard joint limits.
// Returns the new state and the contact forces applied during the step.
// Throws DivergenceError if the new state is not finite.
std::pair<PlanarState, ContactReport> Step(const MorphologySpec& m,
                                           const PlanarState& s,
                                           const JointPair& torques,
                                           const SimConfig& cfg);

struct KinematicObservables {
  Eigen::Vector2d p_com = Eigen::Vector2d::Zero();
  double h_com = 0.0;
  Eigen::Vector2d p_clearance = Eigen::Vector2d::Zero();
  double h_clearance = 0.0;
};

KinematicObservables ComputeKinematicObservables(const MorphologySpec& m,
                                                 const PlanarState& s);

struct ConservedQuantities {
  double mechanical_energy = 0.0;            // J, datum z = 0
  double centroidal_angular_momentum = 0.0;  // kg m^2/s about p_com
  double centroidal_inertia_pitch = 0.0;     // kg m^2 about p_com
};

ConservedQuantities ComputeConservedQuantities(const MorphologySpec& m,
                                               const PlanarState& s,
                                               double gravity = 9.81);

// Whole-body CoM velocity.
Eigen::Vector2d ComVelocity(const MorphologySpec& m, const PlanarState& s);

// World positions of the link CoMs (bike, neck, head) and wheel centers.
struct LinkPositions {
  std::array<Eigen::Vector2d, 3> com;
  std::array<double, 3> angle;
  Eigen::Vector2d rear_wheel;
  Eigen::Vector2d front_wheel;
  Eigen::Vector2d mu_pivot;
  Eigen::Vector2d qh_pivot;
};
LinkPositions ComputeLinkPositions(const MorphologySpec& m, const Vec5& q);

// Resting state at `joints` with both wheels on the ground at the penalty
// penetration that carries the robot's weight.
PlanarState GroundedState(const MorphologySpec& m, const JointPair& joints,
                          const SimConfig& cfg);

// Zeroes the velocity of the selected joints with an impulse that leaves
// the total linear and angular momentum of the chain unchanged.
Vec5 ProjectJointVelocities(const MorphologySpec& m, const Vec5& q,
                            const Vec5& v, bool zero_mu, bool zero_qh);

}  // namespace umv::core

#endif  // UMV_CORE_PLANAR_DYNAMICS_H_
