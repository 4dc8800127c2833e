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
#include "umv/jump/jump_simulation.h"
#include "umv/jump/point_mass_oracle.h"

namespace umv::jump {
namespace {

ExtensionPolicy NominalPolicy(FlightMode flight = FlightMode::kTuck) {
  ExtensionPolicy p;
  p.mode = ExtensionMode::kBangBang;
  p.crouch = DefaultCrouch();
  p.extend = DefaultExtend();
  p.flight = flight;
  return p;
}

// CoM rise from the last ground sample to the top of the trace.
double ApexGain(const JumpTrace& trace) {
  double h_liftoff = trace.samples.front().observables.h_com;
  double h_max = h_liftoff;
  for (const auto& s : trace.samples) {
    if (s.state.time <= trace.t_liftoff) h_liftoff = s.observables.h_com;
    h_max = std::max(h_max, s.observables.h_com);
  }
  return h_max - h_liftoff;
}

TEST(JumpSimulationTest, ZeroStrengthNeverLiftsOff) {
  auto m = core::NominalMorphology();
  m.mu_actuator.max_output_torque = 0.0;
  m.qh_actuator.max_output_torque = 0.0;
  const auto trace = SimulateJump(m, NominalPolicy(), core::SimConfig{});
  EXPECT_FALSE(trace.lifted_off);
  EXPECT_EQ(trace.t_liftoff, trace.t_apogee);
  const auto metrics = ComputeJumpMetrics(trace);
  EXPECT_FALSE(metrics.lifted_off);
  EXPECT_EQ(metrics.contact_ratio, 1.0);
  for (const auto& s : trace.samples) {
    EXPECT_TRUE(s.contacts.rear_in_contact || s.contacts.front_in_contact);
  }
}

class PogoTest : public ::testing::TestWithParam<double> {};

TEST_P(PogoTest, MatchesPointMassOracle) {
  PogoParams p;
  p.force = GetParam() * p.body_mass * 9.81;
  const auto trace = SimulateJump(MakePogoMorphology(p), PogoPolicy(p),
                                  PogoSimConfig(p));
  ASSERT_TRUE(trace.lifted_off);
  const auto oracle = PointMassOracle(p.body_mass, p.force, p.stroke);
  EXPECT_NEAR(ContactRatio(trace), oracle.contact_ratio,
              0.05 * oracle.contact_ratio);
  EXPECT_NEAR(ApexGain(trace), oracle.apex_gain, 0.02 * oracle.apex_gain);
}

INSTANTIATE_TEST_SUITE_P(ForceOverWeight, PogoTest,
                         ::testing::Values(1.5, 2.0, 3.0));

TEST(JumpSimulationTest, ContactRatioFormula) {
  JumpTrace t;
  t.t0 = 0.1;
  t.t_liftoff = 0.3;
  t.t_apogee = 0.5;
  t.lifted_off = true;
  EXPECT_DOUBLE_EQ(ContactRatio(t), 0.5);
  t.lifted_off = false;
  EXPECT_EQ(ContactRatio(t), 1.0);
  t.lifted_off = true;
  t.t_apogee = t.t0;
  EXPECT_THROW(ContactRatio(t), DegenerateTraceError);
}

TEST(JumpSimulationTest, EmptyTraceHasNoMetrics) {
  EXPECT_THROW(ComputeJumpMetrics(JumpTrace{}), DegenerateTraceError);
}

TEST(JumpSimulationTest, NominalJumpClearsTheGround) {
  const auto m = core::NominalMorphology();
  const auto trace = SimulateJump(m, NominalPolicy(), core::SimConfig{});
  ASSERT_TRUE(trace.lifted_off);
  EXPECT_LT(trace.t0, trace.t_liftoff);
  EXPECT_LT(trace.t_liftoff, trace.t_apogee);
  const auto metrics = ComputeJumpMetrics(trace);
  EXPECT_GT(metrics.max_h_clearance, 0.0);
  EXPECT_GT(metrics.contact_ratio, 0.0);
  EXPECT_LT(metrics.contact_ratio, 1.0);
  EXPECT_GT(metrics.peak_mechanical_power, 0.0);
  // Samples are time ordered, respect the joint limits and the torque
  // envelope.
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const auto& s = trace.samples[i];
    if (i > 0) {
      EXPECT_GT(s.state.time, trace.samples[i - 1].state.time);
    }
    EXPECT_GE(s.state.q[core::kMu], m.mu.lower - 1e-12);
    EXPECT_LE(s.state.q[core::kMu], m.mu.upper + 1e-12);
    EXPECT_GE(s.state.q[core::kQh], m.qh.lower - 1e-12);
    EXPECT_LE(s.state.q[core::kQh], m.qh.upper + 1e-12);
    EXPECT_LE(std::abs(s.torques.mu),
              core::TorqueAvailable(m.mu_actuator, s.state.v[core::kMu]) + 1e-9);
    EXPECT_LE(std::abs(s.torques.qh),
              core::TorqueAvailable(m.qh_actuator, s.state.v[core::kQh]) + 1e-9);
    EXPECT_GE(metrics.max_h_com, s.observables.h_com);
    EXPECT_GE(metrics.max_h_clearance, s.observables.h_clearance);
  }
  // Apogee is the end of the trace, where the CoM stops rising.
  EXPECT_NEAR(trace.samples.back().state.time, trace.t_apogee, 2e-4);
}

TEST(JumpSimulationTest, RepeatedRunsAreIdentical) {
  const auto m = core::NominalMorphology();
  const auto a = ComputeJumpMetrics(SimulateJump(m, NominalPolicy(), {}));
  const auto b = ComputeJumpMetrics(SimulateJump(m, NominalPolicy(), {}));
  EXPECT_EQ(a.max_h_com, b.max_h_com);
  EXPECT_EQ(a.max_h_clearance, b.max_h_clearance);
  EXPECT_EQ(a.contact_ratio, b.contact_ratio);
}

TEST(JumpSimulationTest, PassiveFlightPeaksPowerBeforeLiftoff) {
  const auto trace = SimulateJump(core::NominalMorphology(),
                                  NominalPolicy(FlightMode::kRelax), {});
  ASSERT_TRUE(trace.lifted_off);
  const std::size_t peak = PeakPowerSample(trace);
  EXPECT_LE(trace.samples[peak].state.time, trace.t_liftoff);
  EXPECT_GE(trace.samples[peak].state.time, trace.t0);
}

TEST(JumpSimulationTest, OptimizerOnSinglePointMatchesDirectRun) {
  const auto m = core::NominalMorphology();
  const auto [policy, metrics] =
      OptimizeExtensionProfile(m, {}, DefaultSearchSpace());
  auto expected = NominalPolicy();
  // Bang-bang candidates carry the first ramp duration, unused.
  expected.ramp_duration = DefaultSearchSpace().ramp_durations.front();
  EXPECT_EQ(policy, expected);
  const auto direct = ComputeJumpMetrics(SimulateJump(m, policy, {}));
  EXPECT_EQ(metrics.max_h_clearance, direct.max_h_clearance);
  EXPECT_EQ(metrics.contact_ratio, direct.contact_ratio);
}

TEST(JumpSimulationTest, OptimizerKeepsFirstOfTies) {
  auto space = DefaultSearchSpace();
  space.modes = {ExtensionMode::kBangBang};
  space.crouch = {DefaultCrouch(), DefaultCrouch()};
  const auto policies = EnumeratePolicies(space);
  ASSERT_EQ(policies.size(), 2u);
  const auto best = OptimizeExtensionProfile(core::NominalMorphology(), {}, space);
  EXPECT_EQ(best.first, policies.front());
}

TEST(JumpSimulationTest, OptimizerPrefersTheFullerPush) {
  auto space = DefaultSearchSpace();
  const JointPair shallow{DefaultCrouch().mu + 0.2, DefaultCrouch().qh - 0.3};
  space.extend = {shallow, DefaultExtend()};
  const auto m = core::NominalMorphology();
  const auto [policy, metrics] = OptimizeExtensionProfile(m, {}, space);
  EXPECT_EQ(policy.extend, DefaultExtend());
  auto weak = NominalPolicy();
  weak.extend = shallow;
  const auto weak_metrics = ComputeJumpMetrics(SimulateJump(m, weak, {}));
  EXPECT_GT(metrics.max_h_clearance, weak_metrics.max_h_clearance);
}

TEST(JumpSimulationTest, RejectsInvalidPolicy) {
  auto p = NominalPolicy();
  p.crouch.qh = 10.0;
  EXPECT_THROW(SimulateJump(core::NominalMorphology(), p, {}), InvalidSpecError);
}

}  // namespace
}  // namespace umv::jump
