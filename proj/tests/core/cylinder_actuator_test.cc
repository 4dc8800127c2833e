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

#include <gtest/gtest.h>

#include "umv/common/errors.h"
#include "umv/core/actuator.h"
#include "umv/core/cylinder.h"

namespace umv::core {
namespace {

TEST(CylinderTest, SlenderRod) {
  const LinkInertia li = CylinderInertia({1.0, 0.0, 1.0});
  EXPECT_DOUBLE_EQ(li.mass, 1.0);
  EXPECT_DOUBLE_EQ(li.com_offset, 0.5);
  EXPECT_NEAR(li.inertia_about_com, 1.0 / 12.0, 1e-15);
}

TEST(CylinderTest, SolidCylinder) {
  const LinkInertia li = CylinderInertia({0.4, 0.05, 2.0});
  EXPECT_NEAR(li.inertia_about_com, 2.0 * (0.16 / 12.0 + 0.0025 / 4.0), 1e-15);
  EXPECT_NEAR(li.inertia_about_com, 0.0279167, 1e-7);
  EXPECT_DOUBLE_EQ(li.com_offset, 0.2);
  EXPECT_NEAR(AxialInertia({0.4, 0.05, 2.0}), 2.0 * 0.0025 / 2.0, 1e-15);
}

TEST(CylinderTest, ParallelAxisBound) {
  for (double L : {0.1, 0.4, 1.0}) {
    for (double r : {0.0, 0.05, 0.3}) {
      const CylinderSpec c{L, r, 3.0};
      EXPECT_LE(CylinderInertia(c).inertia_about_com,
                c.mass * (L * L / 4 + r * r));
    }
  }
}

TEST(CylinderTest, RejectsBadSpecs) {
  EXPECT_THROW(CylinderInertia({0.4, 0.05, 0.0}), InvalidSpecError);
  EXPECT_THROW(CylinderInertia({0.0, 0.05, 1.0}), InvalidSpecError);
  EXPECT_THROW(CylinderInertia({0.4, -0.01, 1.0}), InvalidSpecError);
}

TEST(ActuatorTest, Ak10EnvelopeFromTable) {
  const ActuatorSpec a = Ak10_9(297.0 / 22.0);
  EXPECT_NEAR(a.max_output_torque, 72.0, 1e-9);
  EXPECT_NEAR(a.max_output_speed, 29.4, 1e-9);
  EXPECT_NEAR(TorqueAvailable(a, 0.0), 72.0, 1e-9);
  EXPECT_NEAR(TorqueAvailable(a, 29.4), 0.0, 1e-9);
  EXPECT_NEAR(TorqueAvailable(a, 14.7), 36.0, 1e-9);
  EXPECT_NEAR(TorqueAvailable(a, -14.7), 36.0, 1e-9);
  EXPECT_EQ(TorqueAvailable(a, 40.0), 0.0);
}

TEST(ActuatorTest, EnvelopeProperties) {
  const ActuatorSpec one = Ak10_9(297.0 / 22.0, 1);
  const ActuatorSpec two = Ak10_9(297.0 / 22.0, 2);
  double prev = TorqueAvailable(one, 0.0);
  for (double w = 0.0; w <= 40.0; w += 0.5) {
    const double t = TorqueAvailable(one, w);
    EXPECT_GE(t, 0.0);
    EXPECT_LE(t, prev);
    EXPECT_DOUBLE_EQ(TorqueAvailable(two, w), 2.0 * t);
    prev = t;
  }
}

TEST(ActuatorTest, PdLaw) {
  ActuatorSpec a = Ak10_9(297.0 / 22.0);
  a.kp = 10;
  a.kd = 1;
  EXPECT_NEAR(PdTorque(a, 1.0, 0.5, 0.0, 2.0), 3.0, 1e-12);
  a.kp = 0;
  a.kd = 2;
  EXPECT_NEAR(PdTorque(a, 3.0, -1.0, 5.0, 4.0), 2.0, 1e-12);
  a.kp = 1000;
  a.kd = 0;
  EXPECT_NEAR(PdTorque(a, 1.0, 0.0, 0.0, 0.0), 72.0, 1e-9);
  EXPECT_NEAR(PdTorque(a, -1.0, 0.0, 0.0, 0.0), -72.0, 1e-9);
}

TEST(ActuatorTest, ReflectedInertiaOfPair) {
  const ActuatorSpec pair = Ak10_9(450.0 / 22.0, 2);
  EXPECT_NEAR(ReflectedInertia(pair), 2 * 1e-4 * std::pow(450.0 / 22.0, 2), 1e-15);
  EXPECT_NEAR(ReflectedInertia(pair), 0.08368, 1e-5);
}

TEST(ActuatorTest, RegearingKeepsMotorLimits) {
  const ActuatorSpec a = Ak10_9(297.0 / 22.0, 2, 800, 30);
  const ActuatorSpec b = WithGearRatio(a, 2 * a.gear_ratio);
  EXPECT_NEAR(b.max_output_torque, 2 * a.max_output_torque, 1e-9);
  EXPECT_NEAR(b.max_output_speed, a.max_output_speed / 2, 1e-9);
  EXPECT_NEAR(ReflectedInertia(b), 4 * ReflectedInertia(a), 1e-12);
  EXPECT_EQ(b.count, 2);
  EXPECT_EQ(b.kp, 800);
}

TEST(ActuatorTest, RejectsBadSpecs) {
  ActuatorSpec a = Ak10_9(10);
  a.max_output_speed = 0;
  EXPECT_THROW(Validate(a), InvalidSpecError);
  a = Ak10_9(10);
  a.gear_ratio = -1;
  EXPECT_THROW(Validate(a), InvalidSpecError);
  a = Ak10_9(10);
  a.count = 0;
  EXPECT_THROW(Validate(a), InvalidSpecError);
  EXPECT_THROW(WithGearRatio(Ak10_9(10), 0.0), InvalidSpecError);
}

}  // namespace
}  // namespace umv::core
