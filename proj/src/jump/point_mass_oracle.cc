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
#include "umv/jump/point_mass_oracle.h"

#include <algorithm>
#include <cmath>

#include "umv/common/errors.h"

namespace umv::jump {

PointMassJump PointMassOracle(double mass, double stance_force, double stroke,
                              double gravity) {
  if (!(mass > 0) || !(gravity > 0)) {
    throw InvalidSpecError("point-mass oracle needs positive mass and gravity");
  }
  if (!(stroke > 0)) throw InvalidSpecError("stroke must be positive");
  if (!(stance_force > mass * gravity)) {
    throw NoLiftoffError("stance force does not exceed the weight");
  }
  PointMassJump out;
  out.stance_acceleration = stance_force / mass - gravity;
  out.v_liftoff = std::sqrt(2.0 * out.stance_acceleration * stroke);
  out.apex_gain = out.v_liftoff * out.v_liftoff / (2.0 * gravity);
  out.contact_ratio = 1.0 / (1.0 + out.stance_acceleration / gravity);
  return out;
}

core::MorphologySpec MakePogoMorphology(const PogoParams& p) {
  if (!(p.body_mass > 0) || !(p.foot_mass > 0) || !(p.stroke > 0) ||
      !(p.force >= 0)) {
    throw InvalidSpecError("invalid pogo parameters");
  }
  core::MorphologySpec m;
  const double head_mass = 1e-3 * p.body_mass;
  m.bike = {0.2, 0.02, p.foot_mass};
  m.neck = {0.3, 0.05, p.body_mass - head_mass};
  m.head = {0.05, 0.02, head_mass};
  m.wheelbase = 0.2;
  m.wheel_radius = 0.05;
  m.mu = {0.0, p.stroke, Eigen::Vector2d(0.1, 0.0), core::JointKind::kPrismatic};
  // The Head is pinned upright on top of the slider.
  m.qh = {-1e-9, 1e-9, Eigen::Vector2d(0.3, 0.0), core::JointKind::kRevolute};
  m.mu_actuator = {p.force, 1e9, 1.0, 0.0, 0.0, 0.0, 1};
  m.qh_actuator = {1.0, 1e9, 1.0, 0.0, 0.0, 0.0, 1};
  m.scale = 0.3;
  core::Validate(m);
  return m;
}

ExtensionPolicy PogoPolicy(const PogoParams& p) {
  ExtensionPolicy policy;
  policy.mode = ExtensionMode::kBangBang;
  policy.crouch = {0.0, 0.0};
  policy.extend = {p.stroke, 0.0};
  policy.trigger_time = 0.02;
  return policy;
}

core::SimConfig PogoSimConfig(const PogoParams& p, double dt) {
  core::SimConfig cfg;
  cfg.dt = dt;
  cfg.contact_damping = std::min(cfg.contact_damping, 0.2 * p.foot_mass / dt);
  return cfg;
}

}  // namespace umv::jump
