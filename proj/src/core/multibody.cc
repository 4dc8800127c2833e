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
#include "umv/core/multibody.h"

#include <Eigen/Cholesky>
#include <Eigen/Geometry>

#include "umv/common/errors.h"

namespace umv::core {

Eigen::Matrix3d AxisAngle(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

int Multibody::AddBody(const Body& body) {
  if (body.parent >= static_cast<int>(bodies_.size()) || body.parent < -1) {
    throw InvalidSpecError("multibody parent must precede its child");
  }
  if (body.axis.norm() == 0.0) {
    throw InvalidSpecError("multibody joint axis must be non-zero");
  }
  Body b = body;
  b.axis.normalize();
  bodies_.push_back(b);
  return dofs() - 1;
}

double Multibody::total_mass() const {
  double m = 0.0;
  for (const Body& b : bodies_) m += b.mass;
  return m;
}

Multibody::Kinematics Multibody::ForwardKinematics(
    const Eigen::VectorXd& q) const {
  const int n = dofs();
  Kinematics k;
  k.rotation.resize(n);
  k.origin.resize(n);
  k.com.resize(n);
  for (int i = 0; i < n; ++i) {
    const Body& b = bodies_[i];
    const Eigen::Matrix3d parent_r =
        b.parent < 0 ? Eigen::Matrix3d::Identity() : k.rotation[b.parent];
    const Eigen::Vector3d parent_p =
        b.parent < 0 ? Eigen::Vector3d::Zero() : k.origin[b.parent];
    if (b.joint == JointType::kRevolute) {
      k.rotation[i] = parent_r * AxisAngle(b.axis, q[i]);
      k.origin[i] = parent_p + parent_r * b.joint_origin;
    } else {
      k.rotation[i] = parent_r;
      k.origin[i] = parent_p + parent_r * (b.joint_origin + b.axis * q[i]);
    }
    k.com[i] = k.origin[i] + k.rotation[i] * b.com;
  }
  return k;
}

Eigen::Vector3d Multibody::CenterOfMass(const Eigen::VectorXd& q) const {
  const Kinematics k = ForwardKinematics(q);
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  double m = 0.0;
  for (int i = 0; i < dofs(); ++i) {
    c += bodies_[i].mass * k.com[i];
    m += bodies_[i].mass;
  }
  return c / m;
}

Eigen::VectorXd Multibody::InverseDynamics(
    const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
    const Eigen::VectorXd& qdd, const Eigen::Vector3d& gravity) const {
  const int n = dofs();
  const Kinematics k = ForwardKinematics(q);
  std::vector<Eigen::Vector3d> omega(n), alpha(n), acc(n);  // acc: origin
  std::vector<Eigen::Vector3d> force(n), moment(n);         // about origin
  for (int i = 0; i < n; ++i) {
    const Body& b = bodies_[i];
    const int p = b.parent;
    const Eigen::Vector3d w_p = p < 0 ? Eigen::Vector3d::Zero() : omega[p];
    const Eigen::Vector3d al_p = p < 0 ? Eigen::Vector3d::Zero() : alpha[p];
    // The world "accelerates" upward to account for gravity.
    const Eigen::Vector3d a_p = p < 0 ? Eigen::Vector3d(-gravity) : acc[p];
    const Eigen::Vector3d o_p = p < 0 ? Eigen::Vector3d::Zero() : k.origin[p];
    const Eigen::Matrix3d r_p =
        p < 0 ? Eigen::Matrix3d::Identity() : k.rotation[p];
    const Eigen::Vector3d axis = r_p * b.axis;
    const Eigen::Vector3d r = k.origin[i] - o_p;
    acc[i] = a_p + al_p.cross(r) + w_p.cross(w_p.cross(r));
    if (b.joint == JointType::kRevolute) {
      omega[i] = w_p + axis * qd[i];
      alpha[i] = al_p + w_p.cross(axis * qd[i]) + axis * qdd[i];
    } else {
      omega[i] = w_p;
      alpha[i] = al_p;
      acc[i] += 2.0 * w_p.cross(axis * qd[i]) + axis * qdd[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    const Body& b = bodies_[i];
    const Eigen::Vector3d c = k.com[i] - k.origin[i];
    const Eigen::Vector3d a_com =
        acc[i] + alpha[i].cross(c) + omega[i].cross(omega[i].cross(c));
    const Eigen::Matrix3d inertia =
        k.rotation[i] * b.inertia * k.rotation[i].transpose();
    force[i] = b.mass * a_com;
    moment[i] = inertia * alpha[i] + omega[i].cross(inertia * omega[i]) +
                c.cross(force[i]);
  }
  Eigen::VectorXd tau(n);
  for (int i = n - 1; i >= 0; --i) {
    const Body& b = bodies_[i];
    const int p = b.parent;
    const Eigen::Matrix3d r_p =
        p < 0 ? Eigen::Matrix3d::Identity() : k.rotation[p];
    const Eigen::Vector3d axis = r_p * b.axis;
    tau[i] = b.joint == JointType::kRevolute ? axis.dot(moment[i])
                                             : axis.dot(force[i]);
    tau[i] += b.armature * qdd[i];
    if (p >= 0) {
      force[p] += force[i];
      moment[p] += moment[i] + (k.origin[i] - k.origin[p]).cross(force[i]);
    }
  }
  return tau;
}

Eigen::MatrixXd Multibody::MassMatrix(const Eigen::VectorXd& q) const {
  const int n = dofs();
  Eigen::MatrixXd mass(n, n);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    mass.col(j) = InverseDynamics(q, zero, Eigen::VectorXd::Unit(n, j),
                                  Eigen::Vector3d::Zero());
  }
  return 0.5 * (mass + mass.transpose());
}

Eigen::VectorXd Multibody::ForwardDynamics(
    const Eigen::VectorXd& q, const Eigen::VectorXd& qd,
    const Eigen::VectorXd& tau, const Eigen::Vector3d& gravity) const {
  const Eigen::MatrixXd mass = MassMatrix(q);
  const Eigen::VectorXd bias =
      InverseDynamics(q, qd, Eigen::VectorXd::Zero(dofs()), gravity);
  Eigen::LLT<Eigen::MatrixXd> llt(mass);
  if (llt.info() != Eigen::Success) {
    throw NumericalSingularityError("multibody mass matrix is singular");
  }
  return llt.solve(tau - bias);
}

double Multibody::KineticEnergy(const Eigen::VectorXd& q,
                                const Eigen::VectorXd& qd) const {
  return 0.5 * qd.dot(MassMatrix(q) * qd);
}

double Multibody::PotentialEnergy(const Eigen::VectorXd& q,
                                  const Eigen::Vector3d& gravity) const {
  const Kinematics k = ForwardKinematics(q);
  double v = 0.0;
  for (int i = 0; i < dofs(); ++i) v -= bodies_[i].mass * gravity.dot(k.com[i]);
  return v;
}

}  // namespace umv::core
