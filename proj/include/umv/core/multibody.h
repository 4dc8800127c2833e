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
#ifndef UMV_CORE_MULTIBODY_H_
#define UMV_CORE_MULTIBODY_H_

#include <vector>

#include <Eigen/Core>

namespace umv::core {

// Open kinematic tree of single-DoF joints, one joint per body. Bodies must be
// listed parent-first (parent index < body index; -1 is the world).
class Multibody {
 public:
  enum class JointType { kRevolute, kPrismatic };

  struct Body {
    int parent = -1;
    JointType joint = JointType::kRevolute;
    Eigen::Vector3d joint_origin = Eigen::Vector3d::Zero();  // parent frame
    Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();         // parent frame
    double mass = 0.0;
    Eigen::Vector3d com = Eigen::Vector3d::Zero();           // body frame
    Eigen::Matrix3d inertia = Eigen::Matrix3d::Zero();       // about com
    // Reflected rotor inertia added to the joint's own diagonal entry.
    double armature = 0.0;
  };

  struct Kinematics {
    std::vector<Eigen::Matrix3d> rotation;
    std::vector<Eigen::Vector3d> origin;
    std::vector<Eigen::Vector3d> com;
  };

  // Appends a body and returns its index.
  int AddBody(const Body& body);

  int dofs() const { return static_cast<int>(bodies_.size()); }
  const Body& body(int i) const { return bodies_.at(i); }
  Body& mutable_body(int i) { return bodies_.at(i); }
  double total_mass() const;

  Kinematics ForwardKinematics(const Eigen::VectorXd& q) const;
  Eigen::Vector3d CenterOfMass(const Eigen::VectorXd& q) const;

  // Recursive Newton-Euler: joint forces realizing qdd under gravity
  // g_world (e.g. (0, 0, -9.81)).
  Eigen::VectorXd InverseDynamics(const Eigen::VectorXd& q,
                                  const Eigen::VectorXd& qd,
                                  const Eigen::VectorXd& qdd,
                                  const Eigen::Vector3d& gravity) const;

  Eigen::MatrixXd MassMatrix(const Eigen::VectorXd& q) const;

  // Throws NumericalSingularityError if the mass matrix is singular.
  Eigen::VectorXd ForwardDynamics(const Eigen::VectorXd& q,
                                  const Eigen::VectorXd& qd,
                                  const Eigen::VectorXd& tau,
                                  const Eigen::Vector3d& gravity) const;

  double KineticEnergy(const Eigen::VectorXd& q,
                       const Eigen::VectorXd& qd) const;
  double PotentialEnergy(const Eigen::VectorXd& q,
                         const Eigen::Vector3d& gravity) const;

 private:
  std::vector<Body> bodies_;
};

// Rotation by `angle` about the unit vector `axis`.
Eigen::Matrix3d AxisAngle(const Eigen::Vector3d& axis, double angle);

}  // namespace umv::core

#endif  // UMV_CORE_MULTIBODY_H_
