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
#ifndef UMV_JUMP_POINT_MASS_ORACLE_H_
#define UMV_JUMP_POINT_MASS_ORACLE_H_

#include "umv/core/morphology.h"
#include "umv/core/planar_dynamics.h"
#include "umv/jump/extension_policy.h"

namespace umv::jump {

struct PointMassJump {
  double v_liftoff = 0.0;      // m/s
  double apex_gain = 0.0;      // m above the lift-off height
  double contact_ratio = 0.0;  // stance time / (stance + rise time)
  double stance_acceleration = 0.0;
};

// Closed-form jump of a point mass pushed by a constant force over a stroke:
//   a = F/m - g, v = sqrt(2 a s), apex = v^2 / 2g, c = 1 / (1 + a/g).
// Throws NoLiftoffError when F <= m g, InvalidSpecError for a bad stroke.
PointMassJump PointMassOracle(double mass, double stance_force, double stroke,
                              double gravity = 9.81);

// Degenerate single-link "pogo": a light wheeled foot and a body sliding on
// a prismatic mu joint driven by a constant force over `stroke`. The body
// mass is split between the Neck (the slider) and a token Head.
struct PogoParams {
  double body_mass = 23.5;  // moving mass
  double foot_mass = 0.1;
  double force = 2.0 * 23.5 * 9.81;
  double stroke = 0.3;
};
core::MorphologySpec MakePogoMorphology(const PogoParams& params);

// Bang-bang push from the bottom to the top of the stroke.
ExtensionPolicy PogoPolicy(const PogoParams& params);

// Default simulation settings with the contact damping lowered so that
// damping * dt / foot_mass = 0.2. The explicit damping term chatters on the
// light foot near 1.
core::SimConfig PogoSimConfig(const PogoParams& params, double dt = 1e-4);

}  // namespace umv::jump

#endif  // UMV_JUMP_POINT_MASS_ORACLE_H_
