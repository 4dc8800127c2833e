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
#include "umv/core/actuator.h"

#include <algorithm>
#include <cmath>

#include "umv/common/errors.h"

namespace umv::core {

void Validate(const ActuatorSpec& act) {
  // A zero torque limit is accepted as the "dead actuator" limiting case.
  if (!(act.max_output_torque >= 0) || !std::isfinite(act.max_output_torque)) {
    throw InvalidSpecError("actuator max_output_torque must be >= 0");
  }
  if (!(act.max_output_speed > 0)) {
    throw InvalidSpecError("actuator max_output_speed must be positive");
  }
  if (!(act.gear_ratio > 0) || !std::isfinite(act.gear_ratio)) {
    throw InvalidSpecError("actuator gear_ratio must be positive");
  }
  if (!(act.rotor_inertia >= 0)) {
    throw InvalidSpecError("actuator rotor_inertia must be >= 0");
  }
  if (!(act.kp >= 0) || !(act.kd >= 0)) {
    throw InvalidSpecError("actuator gains must be >= 0");
  }
  if (act.count != 1 && act.count != 2) {
    throw InvalidSpecError("actuator count must be 1 or 2");
  }
}

double TorqueAvailable(const ActuatorSpec& act, double joint_velocity) {
  const double derate =
      std::max(0.0, 1.0 - std::abs(joint_velocity) / act.max_output_speed);
  return act.count * act.max_output_torque * derate;
}

double PdTorque(const ActuatorSpec& act, double q_des, double q, double qd_des,
                double qd) {
  const double raw = act.kp * (q_des - q) + act.kd * (qd_des - qd);
  const double limit = TorqueAvailable(act, qd);
  return std::clamp(raw, -limit, limit);
}

double ReflectedInertia(const ActuatorSpec& act) {
  return act.count * act.rotor_inertia * act.gear_ratio * act.gear_ratio;
}

ActuatorSpec WithGearRatio(const ActuatorSpec& act, double gear_ratio) {
  if (!(gear_ratio > 0)) {
    throw InvalidSpecError("gear ratio must be positive");
  }
  ActuatorSpec out = act;
  out.max_output_torque = act.max_output_torque * (gear_ratio / act.gear_ratio);
  out.max_output_speed = act.max_output_speed * (act.gear_ratio / gear_ratio);
  out.gear_ratio = gear_ratio;
  return out;
}

ActuatorSpec Ak10_9(double gear_ratio, int count, double kp, double kd) {
  ActuatorSpec act;
  act.max_output_torque = kAk10MotorTorque * gear_ratio;
  act.max_output_speed = kAk10MotorSpeed / gear_ratio;
  act.gear_ratio = gear_ratio;
  act.rotor_inertia = kDefaultRotorInertia;
  act.kp = kp;
  act.kd = kd;
  act.count = count;
  Validate(act);
  return act;
}

}  // namespace umv::core
