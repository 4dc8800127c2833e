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
#include "umv/core/morphology.h"

#include <cmath>
#include <string>
#include <utility>

#include "umv/common/errors.h"

namespace umv::core {

std::string_view LinkName(LinkId link) {
  switch (link) {
    case LinkId::kBike:
      return "bike";
    case LinkId::kNeck:
      return "neck";
    case LinkId::kHead:
      return "head";
  }
  return "?";
}

LinkId LinkFromName(std::string_view name) {
  for (LinkId id : kAllLinks) {
    if (LinkName(id) == name) return id;
  }
  throw InvalidSpecError("unknown link '" + std::string(name) + "'");
}

const CylinderSpec& MorphologySpec::link(LinkId id) const {
  switch (id) {
    case LinkId::kBike:
      return bike;
    case LinkId::kNeck:
      return neck;
    case LinkId::kHead:
      return head;
  }
  return bike;
}

CylinderSpec& MorphologySpec::link(LinkId id) {
  return const_cast<CylinderSpec&>(std::as_const(*this).link(id));
}

namespace {

void ValidateJoint(const JointSpec& j, const char* name) {
  if (!(j.lower < j.upper)) {
    throw InvalidSpecError(std::string("joint ") + name +
                           ": lower limit must be below upper limit");
  }
  if (!j.mount.allFinite()) {
    throw InvalidSpecError(std::string("joint ") + name + ": bad mount");
  }
}

}  // namespace

void Validate(const MorphologySpec& m) {
  Validate(m.bike);
  Validate(m.neck);
  Validate(m.head);
  ValidateJoint(m.mu, "mu");
  ValidateJoint(m.qh, "q_h");
  if (m.qh.kind != JointKind::kRevolute) {
    throw InvalidSpecError("joint q_h must be revolute");
  }
  Validate(m.mu_actuator);
  Validate(m.qh_actuator);
  if (!(m.wheel_radius > 0)) {
    throw InvalidSpecError("wheel_radius must be positive");
  }
  if (!(m.wheelbase > 0)) throw InvalidSpecError("wheelbase must be positive");
  if (!(m.scale > 0)) throw InvalidSpecError("scale must be positive");
}

MorphologySpec BuildMorphology(const MorphologySpec& base, double scale) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw InvalidSpecError("scale must be positive");
  }
  MorphologySpec out = base;
  for (LinkId id : kAllLinks) {
    CylinderSpec& c = out.link(id);
    c.length *= scale;
    c.mass *= scale;
  }
  out.mu.mount *= scale;
  out.qh.mount *= scale;
  if (out.mu.kind == JointKind::kPrismatic) {
    out.mu.lower *= scale;
    out.mu.upper *= scale;
  }
  out.wheel_radius *= scale;
  out.wheelbase *= scale;
  out.scale *= scale;
  Validate(out);
  return out;
}

MorphologySpec WithLinkMass(const MorphologySpec& m, LinkId link, double mass) {
  if (!(mass > 0)) throw InvalidSpecError("link mass must be positive");
  MorphologySpec out = m;
  out.link(link).mass = mass;
  return out;
}

MorphologySpec NominalMorphology() {
  MorphologySpec m;
  m.bike = {0.60, 0.03, 6.5};
  m.neck = {0.40, 0.04, 2.5};
  m.head = {0.30, 0.10, 14.5};
  m.mu = {0.15, 2.95, Eigen::Vector2d(0.0, 0.15), JointKind::kRevolute};
  m.qh = {-2.6, 2.6, Eigen::Vector2d(0.40, 0.0), JointKind::kRevolute};
  // A0 + A1 drive mu together in the sagittal (locked) representation;
  // A2 + A3 are the coupled pair on q_h.
  m.mu_actuator = {72.0, 29.4, 297.0 / 22.0, kDefaultRotorInertia,
                   800.0, 30.0, 2};
  m.qh_actuator = {109.0, 19.4, 450.0 / 22.0, kDefaultRotorInertia,
                   800.0, 30.0, 2};
  m.wheel_radius = 0.15;
  m.wheelbase = 0.60;
  m.scale = 0.4;
  return m;
}

MorphologySpec UnitMorphology() {
  return BuildMorphology(NominalMorphology(), 1.0 / 0.4);
}

}  // namespace umv::core
