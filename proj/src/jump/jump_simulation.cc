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
#include "umv/jump/jump_simulation.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "umv/common/errors.h"

namespace umv::jump {

JumpTrace SimulateJump(const core::MorphologySpec& m,
                       const ExtensionPolicy& policy,
                       const core::SimConfig& cfg,
                       const JumpOptions& options) {
  core::Validate(m);
  core::Validate(cfg);
  Validate(policy, m);

  // The crouch is held rigidly (joints locked) while the base settles onto
  // its contacts, and stays locked until the trigger releases it.
  core::SimConfig locked = cfg;
  locked.lock_joints = true;
  core::PlanarState state = core::GroundedState(m, policy.crouch, cfg);
  const int settle_steps = static_cast<int>(std::ceil(options.settle_time / cfg.dt));
  for (int i = 0; i < settle_steps; ++i) {
    state = core::Step(m, state, {0.0, 0.0}, locked).first;
  }
  state.time = 0.0;

  JumpTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(options.timeout / cfg.dt) / 4);
  double t0 = std::numeric_limits<double>::quiet_NaN();
  bool airborne = false;
  bool armed = false;
  bool have_apogee = false;
  double prev_vz = 0.0, prev_t = 0.0;
  const double h_start = core::ComputeKinematicObservables(m, state).h_com;
  while (true) {
    const bool held = state.time < policy.trigger_time;
    const JointPair tau =
        held ? JointPair{0.0, 0.0}
             : PolicyTorques(m, policy, state, state.time, airborne);
    auto [next, contacts] = core::Step(m, state, tau, held ? locked : cfg);

    JumpSample sample;
    sample.state = state;
    sample.contacts = contacts;
    sample.torques = tau;
    sample.observables = core::ComputeKinematicObservables(m, state);
    sample.com_vz = core::ComVelocity(m, state).y();
    trace.samples.push_back(sample);

    const double t = state.time;
    if (std::isnan(t0) && (std::abs(state.v[core::kMu]) > options.onset_speed ||
                           std::abs(state.v[core::kQh]) > options.onset_speed)) {
      t0 = t;
    }
    if (!std::isnan(t0)) {
      if (!airborne && !contacts.any_contact() && sample.com_vz > 0.0) {
        airborne = true;
        trace.lifted_off = true;
        trace.t_liftoff = t;
      }
      if (sample.com_vz > options.stance_apogee_speed) armed = true;
      if (!armed && !airborne &&
          sample.observables.h_com < h_start - options.collapse_drop) {
        break;
      }
      if ((armed || airborne) && prev_vz > 0.0 && sample.com_vz <= 0.0) {
        trace.t_apogee =
            prev_t + (t - prev_t) * prev_vz / (prev_vz - sample.com_vz);
        have_apogee = true;
        break;
      }
    }
    prev_vz = sample.com_vz;
    prev_t = t;
    if (next.time > options.timeout) break;
    state = next;
  }
  trace.t0 = std::isnan(t0) ? 0.0 : t0;
  if (!have_apogee) trace.t_apogee = trace.samples.back().state.time;
  if (!trace.lifted_off) trace.t_liftoff = trace.t_apogee;
  return trace;
}

double ContactRatio(const JumpTrace& trace) {
  if (!trace.lifted_off) return 1.0;
  const double span = trace.t_apogee - trace.t0;
  if (!(span > 0.0)) {
    throw DegenerateTraceError("jump trace has t_apogee == t0");
  }
  return (trace.t_liftoff - trace.t0) / span;
}

std::size_t PeakPowerSample(const JumpTrace& trace) {
  std::size_t best = 0;
  double best_power = -1.0;
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const JumpSample& s = trace.samples[i];
    const double power = std::abs(s.torques.mu * s.state.v[core::kMu]) +
                         std::abs(s.torques.qh * s.state.v[core::kQh]);
    if (power > best_power) {
      best_power = power;
      best = i;
    }
  }
  return best;
}

JumpMetrics ComputeJumpMetrics(const JumpTrace& trace) {
  if (trace.samples.empty()) {
    throw DegenerateTraceError("jump trace has no samples");
  }
  JumpMetrics out;
  out.max_h_com = -std::numeric_limits<double>::infinity();
  out.max_h_clearance = -std::numeric_limits<double>::infinity();
  for (const JumpSample& s : trace.samples) {
    out.max_h_com = std::max(out.max_h_com, s.observables.h_com);
    out.max_h_clearance = std::max(out.max_h_clearance, s.observables.h_clearance);
    const double power = std::abs(s.torques.mu * s.state.v[core::kMu]) +
                         std::abs(s.torques.qh * s.state.v[core::kQh]);
    out.peak_mechanical_power = std::max(out.peak_mechanical_power, power);
  }
  out.contact_ratio = ContactRatio(trace);
  out.lifted_off = trace.lifted_off;
  return out;
}

std::pair<ExtensionPolicy, JumpMetrics> OptimizeExtensionProfile(
    const core::MorphologySpec& m, const core::SimConfig& cfg,
    const ExtensionSearchSpace& space, const JumpOptions& options) {
  const std::vector<ExtensionPolicy> candidates = EnumeratePolicies(space);
  bool have_best = false;
  std::pair<ExtensionPolicy, JumpMetrics> best;
  std::exception_ptr last_error;
  for (const ExtensionPolicy& policy : candidates) {
    JumpMetrics metrics;
    try {
      metrics = ComputeJumpMetrics(SimulateJump(m, policy, cfg, options));
    } catch (const DivergenceError&) {
      last_error = std::current_exception();
      continue;
    }
    if (!have_best || metrics.max_h_clearance > best.second.max_h_clearance) {
      best = {policy, metrics};
      have_best = true;
    }
  }
  if (!have_best) std::rethrow_exception(last_error);
  return best;
}

}  // namespace umv::jump
