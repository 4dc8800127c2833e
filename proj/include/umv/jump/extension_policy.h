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
#ifndef UMV_JUMP_EXTENSION_POLICY_H_
#define UMV_JUMP_EXTENSION_POLICY_H_

#include <string_view>
#include <vector>

#include "umv/core/morphology.h"
#include "umv/core/planar_dynamics.h"

namespace umv::jump {

using core::JointPair;

enum class ExtensionMode { kBangBang, kPdTrackedRamp };
std::string_view ModeName(ExtensionMode mode);
ExtensionMode ModeFromName(std::string_view name);

// What the joints do once the robot is airborne: keep running the stance
// law, drive back to the crouch posture to pull the wheels up, or go limp.
enum class FlightMode { kContinue, kTuck, kRelax };
std::string_view FlightModeName(FlightMode mode);
FlightMode FlightModeFromName(std::string_view name);

// Crouch-to-extend excitation. Before trigger_time both joints hold the
// crouch with their PD gains. Afterwards the PD mode tracks a linear ramp
// from crouch to extend over ramp_duration; the bang-bang mode drives each
// joint at its full available torque until it reaches the extend posture
// and then holds it. `flight` selects the airborne behavior.
struct ExtensionPolicy {
  ExtensionMode mode = ExtensionMode::kPdTrackedRamp;
  JointPair crouch;
  JointPair extend;
  double trigger_time = 0.05;
  double ramp_duration = 0.1;
  FlightMode flight = FlightMode::kContinue;

  bool operator==(const ExtensionPolicy&) const = default;
};

// Throws InvalidSpecError if a posture leaves the joint limits or the ramp
// is not positive in PD mode.
void Validate(const ExtensionPolicy& policy, const core::MorphologySpec& m);

// Envelope-clamped joint torques commanded at trace time `time`.
// `airborne` switches to the policy's flight behavior.
JointPair PolicyTorques(const core::MorphologySpec& m,
                        const ExtensionPolicy& policy,
                        const core::PlanarState& s, double time,
                        bool airborne = false);

// Candidate policies for the inner design-point search.
struct ExtensionSearchSpace {
  std::vector<JointPair> crouch;
  std::vector<JointPair> extend;
  std::vector<double> ramp_durations;
  std::vector<ExtensionMode> modes = {ExtensionMode::kPdTrackedRamp};
  double trigger_time = 0.05;
  FlightMode flight = FlightMode::kContinue;

  bool operator==(const ExtensionSearchSpace&) const = default;
};

// Enumerates the space in grid order: mode, crouch, extend, ramp (fastest).
// The bang-bang mode ignores the ramp axis and contributes one policy per
// (crouch, extend) pair.
std::vector<ExtensionPolicy> EnumeratePolicies(const ExtensionSearchSpace& space);

// Postures used for the morphology-B jump.
JointPair DefaultCrouch();
JointPair DefaultExtend();
// A single full-effort bang-bang push with a flight tuck. The ramp list is
// kept for configs that add the PD mode.
ExtensionSearchSpace DefaultSearchSpace();

}  // namespace umv::jump

#endif  // UMV_JUMP_EXTENSION_POLICY_H_
