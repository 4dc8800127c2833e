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
#ifndef UMV_CORE_ACTUATOR_H_
#define UMV_CORE_ACTUATOR_H_

namespace umv::core {

// Output-side limits of a geared motor, or of a coupled pair driving one
// joint. For a pair (count = 2) the torque and rotor inertia double while
// the speed limit stays that of a single unit.
struct ActuatorSpec {
  double max_output_torque = 0.0;  // N m, per unit
  double max_output_speed = 0.0;   // rad/s
  double gear_ratio = 1.0;         // output:input
  double rotor_inertia = 1e-4;     // kg m^2 at the motor shaft, per unit
  double kp = 0.0;                 // N m / rad
  double kd = 0.0;                 // N m s / rad
  int count = 1;

  bool operator==(const ActuatorSpec&) const = default;
};

// Motor-side limits of the CubeMars AK10-9, back-computed from its 297:22
// installation (72 N m, 29.4 rad/s at the output).
inline constexpr double kAk10MotorTorque = 72.0 * 22.0 / 297.0;
inline constexpr double kAk10MotorSpeed = 29.4 * 297.0 / 22.0;
inline constexpr double kDefaultRotorInertia = 1e-4;

void Validate(const ActuatorSpec& act);

// count * max_output_torque * max(0, 1 - |w| / max_output_speed).
double TorqueAvailable(const ActuatorSpec& act, double joint_velocity);

// PD law clamped to +/- TorqueAvailable(act, qd).
double PdTorque(const ActuatorSpec& act, double q_des, double q, double qd_des,
                double qd);

// Rotor inertia seen at the joint: count * J_rotor * GR^2.
double ReflectedInertia(const ActuatorSpec& act);

// Re-gears an actuator keeping its motor-side limits: output torque scales
// with the ratio and output speed with its inverse.
ActuatorSpec WithGearRatio(const ActuatorSpec& act, double gear_ratio);

// AK10-9 installed at the given ratio.
ActuatorSpec Ak10_9(double gear_ratio, int count = 1, double kp = 0.0,
                    double kd = 0.0);

}  // namespace umv::core

#endif  // UMV_CORE_ACTUATOR_H_
