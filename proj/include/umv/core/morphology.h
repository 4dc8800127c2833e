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
#ifndef UMV_CORE_MORPHOLOGY_H_
#define UMV_CORE_MORPHOLOGY_H_

#include <array>
#include <string_view>

#include <Eigen/Core>

#include "umv/core/actuator.h"
#include "umv/core/cylinder.h"

namespace umv::core {

enum class LinkId { kBike, kNeck, kHead };
inline constexpr std::array<LinkId, 3> kAllLinks = {LinkId::kBike, LinkId::kNeck,
                                                    LinkId::kHead};
std::string_view LinkName(LinkId link);
// Throws InvalidSpecError on an unknown name.
LinkId LinkFromName(std::string_view name);

enum class JointKind { kRevolute, kPrismatic };

struct JointSpec {
  double lower = 0.0;  // rad (m for a prismatic joint)
  double upper = 0.0;
  // Pivot location. For mu: relative to the rear axle in the Bike frame
  // (x forward, z up). For q_h: relative to the mu pivot in the Neck frame
  // (x along the Neck).
  Eigen::Vector2d mount = Eigen::Vector2d::Zero();
  JointKind kind = JointKind::kRevolute;

  bool operator==(const JointSpec&) const = default;
};

// Sagittal Bike-Neck-Head chain. The Bike frame origin sits midway between
// the wheel axles; the Neck hangs off the Bike through mu and the Head off
// the Neck through q_h. With a prismatic mu the Neck slides along the Bike
// z axis (the single-link "pogo" degenerate case).
struct MorphologySpec {
  CylinderSpec bike;
  CylinderSpec neck;
  CylinderSpec head;
  JointSpec mu;
  JointSpec qh;
  ActuatorSpec mu_actuator;  // GR_alpha
  ActuatorSpec qh_actuator;  // GR_beta
  double wheel_radius = 0.15;
  double wheelbase = 0.6;
  double scale = 1.0;  // 1.0 == Neck length of 1 m

  double total_mass() const { return bike.mass + neck.mass + head.mass; }
  const CylinderSpec& link(LinkId id) const;
  CylinderSpec& link(LinkId id);

  bool operator==(const MorphologySpec&) const = default;
};

void Validate(const MorphologySpec& m);

// Multiplies every length by `scale`. Link radii stay fixed and masses scale
// with length (constant density); actuators are off-the-shelf and unchanged.
MorphologySpec BuildMorphology(const MorphologySpec& base, double scale);

// Returns a copy with one link's mass replaced, geometry unchanged.
MorphologySpec WithLinkMass(const MorphologySpec& m, LinkId link, double mass);

// The 23.5 kg, 0.4 m Neck design with the installed actuators.
MorphologySpec NominalMorphology();

// NominalMorphology() rescaled to a Neck length of 1 m.
MorphologySpec UnitMorphology();

}  // namespace umv::core

#endif  // UMV_CORE_MORPHOLOGY_H_
