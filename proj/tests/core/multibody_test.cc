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

#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "umv/core/multibody.h"

namespace umv::core {
namespace {

const Eigen::Vector3d kGravity(0, 0, -9.81);

// Four bodies, mixed axes, one prismatic joint, one branch.
Multibody RandomTree(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  auto vec = [&] { return Eigen::Vector3d(u(rng), u(rng), u(rng)); };
  Multibody mb;
  const int parents[] = {-1, 0, 1, 1};
  for (int i = 0; i < 4; ++i) {
    Multibody::Body b;
    b.parent = parents[i];
    b.joint = i == 2 ? Multibody::JointType::kPrismatic
                     : Multibody::JointType::kRevolute;
    b.joint_origin = vec();
    b.axis = vec().normalized();
    b.mass = 1.0 + u(rng) + 0.5;
    b.com = vec();
    const Eigen::Matrix3d r = AxisAngle(vec().normalized(), u(rng) * 3);
    b.inertia = r * Eigen::Vector3d(0.02, 0.03, 0.04).asDiagonal() * r.transpose();
    b.armature = i == 3 ? 0.05 : 0.0;
    mb.AddBody(b);
  }
  return mb;
}

TEST(MultibodyTest, SinglePendulum) {
  Multibody mb;
  Multibody::Body b;
  b.axis = Eigen::Vector3d::UnitY();
  b.mass = 2.0;
  b.com = Eigen::Vector3d(0.5, 0, 0);
  mb.AddBody(b);
  Eigen::VectorXd q(1), qd(1);
  q << 0.3;
  qd << 0.0;
  EXPECT_NEAR(mb.MassMatrix(q)(0, 0), 2.0 * 0.25, 1e-12);
  // Rotating +y takes x toward -z, so the bob falls along +q.
  const Eigen::VectorXd qdd =
      mb.ForwardDynamics(q, qd, Eigen::VectorXd::Zero(1), kGravity);
  EXPECT_NEAR(qdd[0], 9.81 * std::cos(0.3) / 0.5, 1e-9);
}

TEST(MultibodyTest, MassMatrixMatchesKineticEnergy) {
  const Multibody mb = RandomTree(3);
  std::mt19937 rng(11);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd q(4), qd(4);
    for (int i = 0; i < 4; ++i) {
      q[i] = n(rng);
      qd[i] = n(rng);
    }
    const Eigen::MatrixXd M = mb.MassMatrix(q);
    EXPECT_LT((M - M.transpose()).norm(), 1e-12);
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M).eigenvalues().minCoeff(), 0);
    EXPECT_NEAR(mb.KineticEnergy(q, qd), 0.5 * qd.dot(M * qd), 1e-10);
  }
}

TEST(MultibodyTest, ArmatureOnDiagonal) {
  Multibody mb = RandomTree(5);
  Eigen::VectorXd q = Eigen::VectorXd::Constant(4, 0.2);
  const Eigen::MatrixXd with = mb.MassMatrix(q);
  mb.mutable_body(3).armature = 0.0;
  const Eigen::MatrixXd without = mb.MassMatrix(q);
  Eigen::MatrixXd diff = with - without;
  EXPECT_NEAR(diff(3, 3), 0.05, 1e-12);
  diff(3, 3) = 0;
  EXPECT_LT(diff.norm(), 1e-12);
}

TEST(MultibodyTest, GravityIsPotentialGradient) {
  const Multibody mb = RandomTree(7);
  Eigen::VectorXd q(4);
  q << 0.3, -0.7, 0.1, 1.2;
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
  const Eigen::VectorXd g = mb.InverseDynamics(q, zero, zero, kGravity);
  for (int i = 0; i < 4; ++i) {
    const double h = 1e-6;
    Eigen::VectorXd qp = q, qm = q;
    qp[i] += h;
    qm[i] -= h;
    const double dv =
        (mb.PotentialEnergy(qp, kGravity) - mb.PotentialEnergy(qm, kGravity)) / (2 * h);
    EXPECT_NEAR(g[i], dv, 1e-6);
  }
}

TEST(MultibodyTest, ForwardInverseRoundTrip) {
  const Multibody mb = RandomTree(9);
  Eigen::VectorXd q(4), qd(4), tau(4);
  q << 0.1, 0.2, -0.3, 0.4;
  qd << 1.0, -0.5, 0.3, 2.0;
  tau << 0.5, -1.0, 2.0, 0.1;
  const Eigen::VectorXd qdd = mb.ForwardDynamics(q, qd, tau, kGravity);
  EXPECT_LT((mb.InverseDynamics(q, qd, qdd, kGravity) - tau).norm(), 1e-10);
}

TEST(MultibodyTest, EnergyConservedWithoutTorque) {
  const Multibody mb = RandomTree(13);
  Eigen::VectorXd x(8);
  x << 0.3, -0.2, 0.05, 0.7, 0.5, 0.0, -0.2, 0.4;
  auto f = [&](const Eigen::VectorXd& s) {
    Eigen::VectorXd d(8);
    d.head(4) = s.tail(4);
    d.tail(4) = mb.ForwardDynamics(s.head(4), s.tail(4), Eigen::VectorXd::Zero(4),
                                   kGravity);
    return d;
  };
  auto energy = [&](const Eigen::VectorXd& s) {
    return mb.KineticEnergy(s.head(4), s.tail(4)) +
           mb.PotentialEnergy(s.head(4), kGravity);
  };
  const double e0 = energy(x);
  const double dt = 1e-3;
  for (int k = 0; k < 1000; ++k) {
    const Eigen::VectorXd k1 = f(x), k2 = f(x + dt / 2 * k1),
                          k3 = f(x + dt / 2 * k2), k4 = f(x + dt * k3);
    x += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  EXPECT_NEAR(energy(x), e0, 1e-6 * std::max(1.0, std::abs(e0)));
}

TEST(MultibodyTest, CenterOfMassOfTwoEqualBodies) {
  Multibody mb;
  Multibody::Body a;
  a.mass = 1.0;
  a.com = Eigen::Vector3d(1, 0, 0);
  mb.AddBody(a);
  Multibody::Body b = a;
  b.parent = 0;
  b.com = Eigen::Vector3d(3, 0, 0);
  mb.AddBody(b);
  EXPECT_LT((mb.CenterOfMass(Eigen::VectorXd::Zero(2)) - Eigen::Vector3d(2, 0, 0)).norm(),
            1e-12);
  EXPECT_DOUBLE_EQ(mb.total_mass(), 2.0);
}

}  // namespace
}  // namespace umv::core
