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
#ifndef UMV_JUMP_JUMP_SIMULATION_H_
#define UMV_JUMP_JUMP_SIMULATION_H_

#include <utility>
#include <vector>

#include "umv/core/morphology.h"
#include "umv/core/planar_dynamics.h"
#include "umv/jump/extension_policy.h"

namespace umv::jump {

struct JumpSample {
  core::PlanarState state;
  core::ContactReport contacts;
  JointPair torques;
  core::KinematicObservables observables;
  double com_vz = 0.0;
};

// Record of one jump from the settled crouch to apogee (or timeout).
struct JumpTrace {
  std::vector<JumpSample> samples;
  double t0 = 0.0;         // motion onset
  double t_liftoff = 0.0;  // first sample with both wheels off the ground
  double t_apogee = 0.0;   // interpolated zero crossing of the CoM velocity
  bool lifted_off = false;
};

struct JumpMetrics {
  double max_h_com = 0.0;
  double max_h_clearance = 0.0;
  double contact_ratio = 1.0;
  double peak_mechanical_power = 0.0;
  bool lifted_off = false;
};

struct JumpOptions {
  double settle_time = 0.5;  // locked-joint settling before the trace starts
  double timeout = 2.0;      // trace time limit
  // Joint speed (rad/s, or m/s for a slider) marking motion onset.
  double onset_speed = 1e-3;
  // Upward CoM speed that arms apogee detection while still in contact, so
  // a push that never leaves the ground ends at its CoM apex.
  double stance_apogee_speed = 0.05;
  // A push whose CoM sags this far below its starting height before the
  // apogee detection arms has collapsed; the trace ends there.
  double collapse_drop = 0.05;

  bool operator==(const JumpOptions&) const = default;
};

// Settles the robot in its crouch with both wheels grounded, then runs the
// policy until the first apogee, the first downward zero crossing of the CoM
// velocity after the push. Never lifting off is a regular outcome
// (lifted_off = false, contact ratio 1, t_liftoff = t_apogee). Throws
// DivergenceError if the integration blows up.
JumpTrace SimulateJump(const core::MorphologySpec& m,
                       const ExtensionPolicy& policy,
                       const core::SimConfig& cfg,
                       const JumpOptions& options = {});

// (t_liftoff - t0) / (t_apogee - t0); 1 for a trace that never lifts off.
// Throws DegenerateTraceError when t_apogee == t0.
double ContactRatio(const JumpTrace& trace);

// Maxima over the samples. Throws DegenerateTraceError on an empty trace.
JumpMetrics ComputeJumpMetrics(const JumpTrace& trace);

// Index of the sample with the largest sum |tau_i * qd_i|.
std::size_t PeakPowerSample(const JumpTrace& trace);

// Grid search over the space returning the policy with the highest
// max_h_clearance; ties keep the first candidate in grid order. Candidates
// that diverge are skipped; if every candidate diverges the last error is
// rethrown.
std::pair<ExtensionPolicy, JumpMetrics> OptimizeExtensionProfile(
    const core::MorphologySpec& m, const core::SimConfig& cfg,
    const ExtensionSearchSpace& space, const JumpOptions& options = {});

}  // namespace umv::jump

#endif  // UMV_JUMP_JUMP_SIMULATION_H_
