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
#include "umv/jump/extension_policy.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "umv/common/errors.h"
#include "umv/core/actuator.h"

namespace umv::jump {

std::string_view ModeName(ExtensionMode mode) {
  return mode == ExtensionMode::kBangBang ? "bang_bang" : "pd_tracked_ramp";
}

ExtensionMode ModeFromName(std::string_view name) {
  if (name == "bang_bang") return ExtensionMode::kBangBang;
  if (name == "pd_tracked_ramp") return ExtensionMode::kPdTrackedRamp;
  throw InvalidSpecError("unknown extension mode '" + std::string(name) + "'");
}

std::string_view FlightModeName(FlightMode mode) {
  switch (mode) {
    case FlightMode::kTuck: return "tuck";
    case FlightMode::kRelax: return "relax";
    default: return "continue";
  }
}

FlightMode FlightModeFromName(std::string_view name) {
  if (name == "continue") return FlightMode::kContinue;
  if (name == "tuck") return FlightMode::kTuck;
  if (name == "relax") return FlightMode::kRelax;
  throw InvalidSpecError("unknown flight mode '" + std::string(name) + "'");
}

namespace {

bool Within(const core::JointSpec& j, double q) {
  return q >= j.lower && q <= j.upper;
}

double RampTarget(double from, double to, double phase) {
  return from + (to - from) * std::clamp(phase, 0.0, 1.0);
}

double Sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Full torque in direction `dir` until `target` is reached, then PD hold.
double DriveTo(const core::ActuatorSpec& act, double target, double dir,
               double q, double qd) {
  if (dir != 0.0 && (target - q) * dir > 0.0) {
    return dir * core::TorqueAvailable(act, qd);
  }
  return core::PdTorque(act, target, q, 0.0, qd);
}

double BangBang(const core::ActuatorSpec& act, double crouch, double extend,
                double q, double qd, double elapsed) {
  if (elapsed < 0.0) return core::PdTorque(act, crouch, q, 0.0, qd);
  return DriveTo(act, extend, Sign(extend - crouch), q, qd);
}

double Ramp(const core::ActuatorSpec& act, double crouch, double extend,
            double q, double qd, double elapsed, double duration) {
  if (elapsed < 0.0) return core::PdTorque(act, crouch, q, 0.0, qd);
  const double phase = elapsed / duration;
  const double target = RampTarget(crouch, extend, phase);
  const double rate = phase < 1.0 ? (extend - crouch) / duration : 0.0;
  return core::PdTorque(act, target, q, rate, qd);
}

}  // namespace

void Validate(const ExtensionPolicy& p, const core::MorphologySpec& m) {
  if (!Within(m.mu, p.crouch.mu) || !Within(m.qh, p.crouch.qh)) {
    throw InvalidSpecError("crouch posture outside joint limits");
  }
  if (!Within(m.mu, p.extend.mu) || !Within(m.qh, p.extend.qh)) {
    throw InvalidSpecError("extend posture outside joint limits");
  }
  if (p.mode == ExtensionMode::kPdTrackedRamp && !(p.ramp_duration > 0)) {
    throw InvalidSpecError("ramp_duration must be positive in PD mode");
  }
  if (!(p.trigger_time >= 0)) {
    throw InvalidSpecError("trigger_time must be non-negative");
  }
}

JointPair PolicyTorques(const core::MorphologySpec& m, const ExtensionPolicy& p,
                        const core::PlanarState& s, double time, bool airborne) {
  const double elapsed = time - p.trigger_time;
  const JointPair q = s.joint_pos(), qd = s.joint_vel();
  if (airborne && p.flight == FlightMode::kRelax) return {0.0, 0.0};
  if (airborne && p.flight == FlightMode::kTuck) {
    if (p.mode == ExtensionMode::kBangBang) {
      return {DriveTo(m.mu_actuator, p.crouch.mu,
                      Sign(p.crouch.mu - p.extend.mu), q.mu, qd.mu),
              DriveTo(m.qh_actuator, p.crouch.qh,
                      Sign(p.crouch.qh - p.extend.qh), q.qh, qd.qh)};
    }
    return {core::PdTorque(m.mu_actuator, p.crouch.mu, q.mu, 0.0, qd.mu),
            core::PdTorque(m.qh_actuator, p.crouch.qh, q.qh, 0.0, qd.qh)};
  }
  if (p.mode == ExtensionMode::kBangBang) {
    return {BangBang(m.mu_actuator, p.crouch.mu, p.extend.mu, q.mu, qd.mu,
                     elapsed),
            BangBang(m.qh_actuator, p.crouch.qh, p.extend.qh, q.qh, qd.qh,
                     elapsed)};
  }
  return {Ramp(m.mu_actuator, p.crouch.mu, p.extend.mu, q.mu, qd.mu, elapsed,
               p.ramp_duration),
          Ramp(m.qh_actuator, p.crouch.qh, p.extend.qh, q.qh, qd.qh, elapsed,
               p.ramp_duration)};
}

std::vector<ExtensionPolicy> EnumeratePolicies(const ExtensionSearchSpace& s) {
  std::vector<ExtensionPolicy> out;
  for (ExtensionMode mode : s.modes) {
    for (const JointPair& crouch : s.crouch) {
      for (const JointPair& extend : s.extend) {
        if (mode == ExtensionMode::kBangBang) {
          out.push_back({mode, crouch, extend, s.trigger_time,
                         s.ramp_durations.empty() ? 0.1 : s.ramp_durations[0],
                         s.flight});
          continue;
        }
        for (double ramp : s.ramp_durations) {
          out.push_back({mode, crouch, extend, s.trigger_time, ramp, s.flight});
        }
      }
    }
  }
  if (out.empty()) throw InvalidSpecError("extension search space is empty");
  return out;
}

JointPair DefaultCrouch() { return {0.55, 1.9}; }
JointPair DefaultExtend() { return {1.5, 0.1}; }

ExtensionSearchSpace DefaultSearchSpace() {
  ExtensionSearchSpace s;
  s.crouch = {DefaultCrouch()};
  s.extend = {DefaultExtend()};
  s.ramp_durations = {0.04, 0.08, 0.12, 0.16, 0.20};
  s.modes = {ExtensionMode::kBangBang};
  s.flight = FlightMode::kTuck;
  return s;
}

}  // namespace umv::jump
