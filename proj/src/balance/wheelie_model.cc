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

#include "umv/balance/wheelie_model.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "umv/common/errors.h"
#include "umv/core/actuator.h"
#include "umv/core/cylinder.h"

namespace umv::balance {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

Eigen::Matrix3d RodInertia(const core::CylinderSpec& c) {
  const double transverse = core::CylinderInertia(c).inertia_about_com;
  return Eigen::Vector3d(core::AxialInertia(c), transverse, transverse)
      .asDiagonal();
}

Eigen::Vector3d SagittalAxis(double angle) {
  return {std::cos(angle), 0.0, std::sin(angle)};
}

bool Within(const core::JointSpec& j, double q) {
  return q >= j.lower && q <= j.upper;
}

}  // namespace

void Validate(const WheelieModel& model) {
  core::Validate(model.morphology);
  if (model.morphology.mu.kind != core::JointKind::kRevolute) {
    throw InvalidSpecError("wheelie model needs a revolute mu joint");
  }
  if (!(std::abs(model.psi_hat) <= kHalfPi)) {
    throw InvalidSpecError("psi_hat must lie in [-pi/2, pi/2]");
  }
  if (model.zeta_hat && !(std::abs(*model.zeta_hat) <= kHalfPi)) {
    throw InvalidSpecError("zeta_hat must lie in [-pi/2, pi/2]");
  }
  if (!(model.wheel_inertia > 0)) {
    throw InvalidSpecError("wheel_inertia must be positive");
  }
  if (!(model.gravity > 0)) {
    throw InvalidSpecError("gravity must be positive");
  }
  if (model.phi_pivot && !model.phi_pivot->allFinite()) {
    throw InvalidSpecError("phi_pivot must be finite");
  }
}

int CoordinateCount(const WheelieModel& model) {
  return model.zeta_hat ? 7 : 6;
}

int InputCount(const WheelieModel& model) {
  return CoordinateCount(model) - kUnactuated;
}

std::vector<std::string> CoordinateNames(const WheelieModel& model) {
  std::vector<std::string> names = {"roll", "pitch", "wheel",
                                    "mu",   "phi",   "qh"};
  if (model.zeta_hat) names.push_back("zeta");
  return names;
}

std::vector<std::string> StateNames(const WheelieModel& model) {
  std::vector<std::string> names = CoordinateNames(model);
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i) names.push_back(names[i] + "_rate");
  return names;
}

std::vector<std::string> InputNames(const WheelieModel& model) {
  std::vector<std::string> names = CoordinateNames(model);
  names.erase(names.begin(), names.begin() + kUnactuated);
  for (std::string& name : names) name += "_torque";
  return names;
}

Eigen::Vector2d PhiPivot(const WheelieModel& model) {
  if (model.phi_pivot) return *model.phi_pivot;
  return {model.morphology.wheelbase / 3.0, 2.0 * model.morphology.wheel_radius};
}

double AxleIntersectingPsi(const WheelieModel& model) {
  const Eigen::Vector2d p = PhiPivot(model);
  if (p.norm() == 0.0) {
    throw InvalidSpecError("phi pivot on the axle: every axis intersects it");
  }
  double angle = std::atan2(p.y(), p.x());
  if (angle > kHalfPi) angle -= std::numbers::pi;
  if (angle < -kHalfPi) angle += std::numbers::pi;
  return angle;
}

double AxisAngleDistance(double a, double b) {
  const double d = std::remainder(a - b, std::numbers::pi);
  return std::abs(d);
}

WheelieDynamics::WheelieDynamics(const WheelieModel& model) : model_(model) {
  Validate(model);
  n_ = CoordinateCount(model);
  const core::MorphologySpec& m = model.morphology;
  const double r = m.wheel_radius;
  const Eigen::Vector2d pivot = PhiPivot(model);
  const Eigen::Vector3d minus_y(0.0, -1.0, 0.0);
  using Body = core::Multibody::Body;

  Body roll;
  roll.axis = Eigen::Vector3d::UnitX();
  const int roll_i = body_.AddBody(roll);

  Body bike;
  bike.parent = roll_i;
  bike.axis = minus_y;
  bike.mass = m.bike.mass;
  bike.com = {0.5 * m.wheelbase, 0.0, r};
  bike.inertia = RodInertia(m.bike);
  const int bike_i = body_.AddBody(bike);

  Body wheel;
  wheel.parent = bike_i;
  wheel.joint_origin = {0.0, 0.0, r};
  wheel.axis = Eigen::Vector3d::UnitY();
  const double iw = model.wheel_inertia;
  wheel.inertia = Eigen::Vector3d(0.5 * iw, iw, 0.5 * iw).asDiagonal();
  const int wheel_i = body_.AddBody(wheel);

  Body phi;
  phi.parent = bike_i;
  phi.joint_origin = {pivot.x(), 0.0, r + pivot.y()};
  phi.axis = SagittalAxis(model.psi_hat);
  phi.armature = core::ReflectedInertia(m.mu_actuator);
  const int phi_i = body_.AddBody(phi);

  Body neck;
  neck.parent = phi_i;
  neck.joint_origin = {m.mu.mount.x() - pivot.x(), 0.0,
                       m.mu.mount.y() - pivot.y()};
  neck.axis = minus_y;
  neck.mass = m.neck.mass;
  neck.com = {core::CylinderInertia(m.neck).com_offset, 0.0, 0.0};
  neck.inertia = RodInertia(m.neck);
  neck.armature = core::ReflectedInertia(m.mu_actuator);
  const int neck_i = body_.AddBody(neck);

  const Eigen::Vector3d qh_mount(m.qh.mount.x(), 0.0, m.qh.mount.y());
  int head_parent = neck_i;
  int zeta_i = -1;
  Body head;
  head.joint_origin = qh_mount;
  if (model.zeta_hat) {
    Body zeta;
    zeta.parent = neck_i;
    zeta.joint_origin = qh_mount;
    zeta.axis = SagittalAxis(*model.zeta_hat);
    zeta.armature = core::ReflectedInertia(m.qh_actuator);
    zeta_i = body_.AddBody(zeta);
    head_parent = zeta_i;
    head.joint_origin.setZero();
  }
  head.parent = head_parent;
  head.axis = minus_y;
  head.mass = m.head.mass;
  head.com = {core::CylinderInertia(m.head).com_offset, 0.0, 0.0};
  head.inertia = RodInertia(m.head);
  head.armature = core::ReflectedInertia(m.qh_actuator);
  const int head_i = body_.AddBody(head);

  tree_of_coord_ = {roll_i, bike_i, wheel_i, neck_i, phi_i, head_i};
  if (model.zeta_hat) tree_of_coord_.push_back(zeta_i);
}

Eigen::VectorXd WheelieDynamics::ToTree(const Eigen::VectorXd& coords) const {
  Eigen::VectorXd tree(n_);
  for (int i = 0; i < n_; ++i) tree[tree_of_coord_[i]] = coords[i];
  return tree;
}

Eigen::VectorXd WheelieDynamics::FromTree(const Eigen::VectorXd& tree) const {
  Eigen::VectorXd coords(n_);
  for (int i = 0; i < n_; ++i) coords[i] = tree[tree_of_coord_[i]];
  return coords;
}

Eigen::Vector3d WheelieDynamics::CenterOfMass(const Eigen::VectorXd& q) const {
  return body_.CenterOfMass(ToTree(q));
}

Eigen::VectorXd WheelieDynamics::GravityForces(const Eigen::VectorXd& q) const {
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n_);
  return FromTree(body_.InverseDynamics(
      ToTree(q), zero, zero, Eigen::Vector3d(0.0, 0.0, -model_.gravity)));
}

Eigen::MatrixXd WheelieDynamics::MassMatrix(const Eigen::VectorXd& q) const {
  const Eigen::MatrixXd tree = body_.MassMatrix(ToTree(q));
  Eigen::MatrixXd out(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      out(i, j) = tree(tree_of_coord_[i], tree_of_coord_[j]);
    }
  }
  return out;
}

Eigen::VectorXd WheelieDynamics::Accelerations(const Eigen::VectorXd& q,
                                               const Eigen::VectorXd& qd,
                                               const Eigen::VectorXd& u) const {
  if (q.size() != n_ || qd.size() != n_ || u.size() != inputs()) {
    throw InvalidSpecError("wheelie state or input has the wrong size");
  }
  Eigen::VectorXd tau = Eigen::VectorXd::Zero(n_);
  tau.tail(inputs()) = u;
  return FromTree(body_.ForwardDynamics(
      ToTree(q), ToTree(qd), ToTree(tau),
      Eigen::Vector3d(0.0, 0.0, -model_.gravity)));
}

Eigen::VectorXd WheelieDynamics::Derivative(const Eigen::VectorXd& x,
                                            const Eigen::VectorXd& u) const {
  if (x.size() != 2 * n_) {
    throw InvalidSpecError("wheelie state has the wrong size");
  }
  Eigen::VectorXd xd(2 * n_);
  xd.head(n_) = x.tail(n_);
  xd.tail(n_) = Accelerations(x.head(n_), x.tail(n_), u);
  return xd;
}

double WheelieDynamics::Energy(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd q = ToTree(x.head(n_)), qd = ToTree(x.tail(n_));
  return body_.KineticEnergy(q, qd) +
         body_.PotentialEnergy(q, Eigen::Vector3d(0.0, 0.0, -model_.gravity));
}

Eigen::VectorXd WheelieForwardDynamics(const WheelieModel& model,
                                       const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& u) {
  return WheelieDynamics(model).Derivative(x, u);
}

namespace {

constexpr int kMuScan = 64;

WheelieConfig Finish(const WheelieDynamics& dyn, Eigen::VectorXd q) {
  WheelieConfig c;
  c.u = dyn.GravityForces(q).tail(dyn.inputs());
  const Eigen::Vector3d com = dyn.CenterOfMass(q);
  c.com_offset = com.head<2>().norm();
  c.q = std::move(q);
  return c;
}

// Root of the CoM x position in mu, or nullopt. Scans the mu range for the
// first sign change, then brackets it.
std::optional<double> SolveMu(const WheelieDynamics& dyn, Eigen::VectorXd q) {
  const core::JointSpec& mu = dyn.model().morphology.mu;
  auto com_x = [&](double v) {
    q[kMu] = v;
    return dyn.CenterOfMass(q).x();
  };
  double prev_v = mu.lower, prev_f = com_x(prev_v);
  if (prev_f == 0.0) return prev_v;
  for (int i = 1; i <= kMuScan; ++i) {
    const double v = mu.lower + (mu.upper - mu.lower) * i / kMuScan;
    const double f = com_x(v);
    if (f == 0.0) return v;
    if ((f > 0.0) != (prev_f > 0.0)) {
      std::uintmax_t iterations = 200;
      const auto [a, b] = boost::math::tools::toms748_solve(
          com_x, prev_v, v, prev_f, f,
          boost::math::tools::eps_tolerance<double>(50), iterations);
      const double fa = com_x(a), fb = com_x(b);
      return std::abs(fa) <= std::abs(fb) ? a : b;
    }
    prev_v = v;
    prev_f = f;
  }
  return std::nullopt;
}

}  // namespace

StaticConfigSearch FindStaticConfigs(const WheelieModel& model,
                                     const std::vector<double>& pitches,
                                     const std::vector<double>& qh_values) {
  if (pitches.empty() || qh_values.empty()) {
    throw InvalidSpecError("static configuration grid is empty");
  }
  const WheelieDynamics dyn(model);
  const core::MorphologySpec& m = model.morphology;
  StaticConfigSearch out;
  for (double pitch : pitches) {
    for (double qh : qh_values) {
      std::ostringstream cell;
      cell << "pitch " << pitch << " rad, q_h " << qh << " rad: ";
      if (!Within(m.qh, qh)) {
        out.diagnostics.push_back(cell.str() + "q_h outside its limits");
        continue;
      }
      Eigen::VectorXd q = Eigen::VectorXd::Zero(dyn.coordinates());
      q[kPitch] = pitch;
      q[kQh] = qh;
      const std::optional<double> mu = SolveMu(dyn, q);
      if (!mu) {
        out.diagnostics.push_back(cell.str() +
                                  "no mu within its limits balances the CoM");
        continue;
      }
      q[kMu] = *mu;
      WheelieConfig c = Finish(dyn, q);
      if (dyn.CenterOfMass(c.q).z() <= 0.0) {
        out.diagnostics.push_back(cell.str() + "CoM below the contact");
        continue;
      }
      out.configs.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<WheelieConfig> DefaultWheelieConfigs(const WheelieModel& model,
                                                 int count, double qh) {
  if (count < 1) throw InvalidSpecError("config count must be positive");
  constexpr int kScan = 181;  // 0.5 degree steps over [0, pi/2]
  std::vector<double> scan(kScan);
  for (int i = 0; i < kScan; ++i) scan[i] = kHalfPi * i / (kScan - 1);
  const WheelieDynamics dyn(model);
  // Longest run of consecutive feasible pitches.
  int best_lo = -1, best_len = 0, run_lo = 0, run_len = 0;
  for (int i = 0; i < kScan; ++i) {
    Eigen::VectorXd q = Eigen::VectorXd::Zero(dyn.coordinates());
    q[kPitch] = scan[i];
    q[kQh] = qh;
    if (SolveMu(dyn, q)) {
      if (run_len == 0) run_lo = i;
      ++run_len;
      if (run_len > best_len) {
        best_len = run_len;
        best_lo = run_lo;
      }
    } else {
      run_len = 0;
    }
  }
  if (best_len < count + 2) {
    throw InvalidSpecError("feasible wheelie pitch window is too narrow");
  }
  const double lo = scan[best_lo], hi = scan[best_lo + best_len - 1];
  std::vector<double> pitches(count);
  for (int i = 0; i < count; ++i) {
    pitches[i] = lo + (hi - lo) * (i + 1) / (count + 1);
  }
  StaticConfigSearch found = FindStaticConfigs(model, pitches, {qh});
  if (static_cast<int>(found.configs.size()) != count) {
    throw InvalidSpecError("feasible wheelie pitch window is not contiguous");
  }
  return found.configs;
}

std::vector<WheelieConfig> AdaptConfigs(
    const WheelieModel& target, const std::vector<WheelieConfig>& configs) {
  const WheelieDynamics dyn(target);
  const int n = dyn.coordinates();
  std::vector<WheelieConfig> out;
  out.reserve(configs.size());
  for (const WheelieConfig& c : configs) {
    if (c.q.size() < 6) throw InvalidSpecError("config has too few coordinates");
    Eigen::VectorXd q = Eigen::VectorXd::Zero(n);
    q.head(6) = c.q.head(6);
    if (c.q.size() > 6 && n > 6) q[kZeta] = c.q[kZeta];
    out.push_back(Finish(dyn, q));
  }
  return out;
}

}  // namespace umv::balance
