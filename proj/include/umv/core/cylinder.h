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
#ifndef UMV_CORE_CYLINDER_H_
#define UMV_CORE_CYLINDER_H_

namespace umv::core {

// Solid cylinder used to approximate a link.
struct CylinderSpec {
  double length = 1.0;  // m
  double radius = 0.0;  // m
  double mass = 1.0;    // kg

  bool operator==(const CylinderSpec&) const = default;
};

// Mass properties of a link whose axis runs from its proximal joint.
struct LinkInertia {
  double mass = 0.0;               // kg
  double com_offset = 0.0;         // m along the link axis
  double inertia_about_com = 0.0;  // kg m^2, transverse axis
};

// Throws InvalidSpecError unless length > 0, radius >= 0, mass > 0.
void Validate(const CylinderSpec& spec);

// Transverse-axis inertia of a solid cylinder: m (L^2/12 + r^2/4).
LinkInertia CylinderInertia(const CylinderSpec& spec);

// Inertia about the cylinder's own axis: m r^2 / 2.
double AxialInertia(const CylinderSpec& spec);

}  // namespace umv::core

#endif  // UMV_CORE_CYLINDER_H_
