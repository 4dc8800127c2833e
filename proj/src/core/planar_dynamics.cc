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
#include "umv/core/planar_dynamics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Cholesky>

#include "umv/common/errors.h"

namespace umv::core {
namespace {

using Vec2 = Eigen::Vector2d;
using Jac = Eigen::Matrix<double, 2, kPlanarDofs>;

Vec2 Rotate(double angle, const Vec2& w) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * w.x() - s * w.y(), s * w.x() + c * w.y()};
}

Vec2 Perp(const Vec2& w) { return {-w.y(), w.x()}; }

Vec5 Unit(int i) {
  Vec5 e = Vec5::Zero();
  e[i] = 1.0;
  return e;
}

// One summand of a chain point: length(q) * R(angle(q)) * w, with length and
// angle affine in q.
struct Term {
  Vec5 angle_coeff = Vec5::Zero();
  double angle0 = 0.0;
  Vec5 length_coeff = Vec5::Zero();
  double length0 = 1.0;
  Vec2 w = Vec2::Zero();
};

struct PointKinematics {
  Vec2 pos = Vec2::Zero();
  Jac jac = Jac::Zero();
  Vec2 vel_product = Vec2::Zero();  // Jdot * v
};

template <std::size_t N>
PointKinematics Evaluate(const std::array<Term, N>& terms, std::size_t used,
                         const Vec5& q, const Vec5* v) {
  PointKinematics k;
  k.pos = q.head<2>();
  k.jac(0, kX) = 1.0;
  k.jac(1, kZ) = 1.0;
  for (std::size_t i = 0; i < std::min(used, N); ++i) {
    const Term& t = terms[i];
    const double len = t.length0 + t.length_coeff.dot(q);
    const double ang = t.angle0 + t.angle_coeff.dot(q);
    const Vec2 rw = Rotate(ang, t.w);
    const Vec2 pw = Perp(rw);
    k.pos += len * rw;
    for (int j = 0; j < kPlanarDofs; ++j) {
      if (t.length_coeff[j] != 0.0) k.jac.col(j) += t.length_coeff[j] * rw;
      if (t.angle_coeff[j] != 0.0) k.jac.col(j) += len * t.angle_coeff[j] * pw;
    }
    if (v != nullptr) {
      const double len_rate = t.length_coeff.dot(*v);
      const double ang_rate = t.angle_coeff.dot(*v);
      k.vel_product += 2.0 * len_rate * ang_rate * pw -
                       len * ang_rate * ang_rate * rw;
    }
  }
  return k;
}

// Chain description derived from a morphology.
struct Chain {
  std::array<Term, 4> com_terms[3];
  std::size_t com_used[3] = {0, 0, 0};
  std::array<Term, 3> qh_pivot_terms;
  std::size_t qh_pivot_used = 0;
  Term mount;
  Vec5 angle_row[3];
  double angle0[3] = {0, 0, 0};
  double mass[3];
  double inertia[3];
  double half_wheelbase;
  double wheel_radius;
};

Chain MakeChain(const MorphologySpec& m) {
  Chain c;
  const Vec5 e_pitch = Unit(kPitch), e_mu = Unit(kMu), e_qh = Unit(kQh);
  c.half_wheelbase = 0.5 * m.wheelbase;
  c.wheel_radius = m.wheel_radius;
  const LinkInertia li[3] = {CylinderInertia(m.bike), CylinderInertia(m.neck),
                             CylinderInertia(m.head)};
  for (int b = 0; b < 3; ++b) {
    c.mass[b] = li[b].mass;
    c.inertia[b] = li[b].inertia_about_com;
  }
  c.mount.angle_coeff = e_pitch;
  c.mount.w = Vec2(-c.half_wheelbase, 0.0) + m.mu.mount;

  const bool prismatic = m.mu.kind == JointKind::kPrismatic;
  const Vec5 neck_row = prismatic ? e_pitch : Vec5(e_pitch + e_mu);
  const double neck_angle0 = prismatic ? std::numbers::pi / 2 : 0.0;

  c.angle_row[0] = e_pitch;
  c.angle_row[1] = neck_row;
  c.angle_row[2] = neck_row + e_qh;
  c.angle0[1] = neck_angle0;
  c.angle0[2] = neck_angle0;

  auto along_neck = [&](double len) {
    Term t;
    t.angle_coeff = neck_row;
    t.angle0 = neck_angle0;
    t.length0 = len;
    t.w = Vec2(1.0, 0.0);
    return t;
  };
  Term slide = along_neck(0.0);
  slide.length_coeff = e_mu;

  Term qh_offset = along_neck(1.0);
  qh_offset.w = m.qh.mount;

  Term head_com;
  head_com.angle_coeff = neck_row + e_qh;
  head_com.angle0 = neck_angle0;
  head_com.length0 = li[2].com_offset;
  head_com.w = Vec2(1.0, 0.0);

  // Bike CoM is the frame origin: no terms.
  std::size_t n = 0;
  c.com_terms[1][n++] = c.mount;
  if (prismatic) c.com_terms[1][n++] = slide;
  c.com_terms[1][n++] = along_neck(li[1].com_offset);
  c.com_used[1] = n;

  n = 0;
  c.qh_pivot_terms[n++] = c.mount;
  if (prismatic) c.qh_pivot_terms[n++] = slide;
  c.qh_pivot_terms[n++] = qh_offset;
  c.qh_pivot_used = n;

  for (std::size_t i = 0; i < c.qh_pivot_used; ++i) {
    c.com_terms[2][i] = c.qh_pivot_terms[i];
  }
  c.com_terms[2][c.qh_pivot_used] = head_com;
  c.com_used[2] = c.qh_pivot_used + 1;
  return c;
}

PointKinematics LinkCom(const Chain& c, int body, const Vec5& q,
                        const Vec5* v) {
  return Evaluate(c.com_terms[body], c.com_used[body], q, v);
}

// Material point at the bottom of a braked wheel.
PointKinematics WheelContact(const Chain& c, double side, const Vec5& q) {
  std::array<Term, 1> t;
  t[0].angle_coeff = Unit(kPitch);
  t[0].w = Vec2(side * c.half_wheelbase, 0.0);
  PointKinematics k = Evaluate(t, 1, q, nullptr);
  k.pos.y() -= c.wheel_radius;
  k.jac(0, kPitch) += c.wheel_radius;
  return k;
}

Mat5 LinkMassMatrix(const Chain& c, const Vec5& q) {
  Mat5 mass = Mat5::Zero();
  for (int b = 0; b < 3; ++b) {
    const PointKinematics k = LinkCom(c, b, q, nullptr);
    mass.noalias() += c.mass[b] * k.jac.transpose() * k.jac;
    mass.noalias() += c.inertia[b] * c.angle_row[b] * c.angle_row[b].transpose();
  }
  return mass;
}

Mat5 FullMassMatrix(const MorphologySpec& m, const Chain& c, const Vec5& q) {
  Mat5 mass = LinkMassMatrix(c, q);
  mass(kMu, kMu) += ReflectedInertia(m.mu_actuator);
  mass(kQh, kQh) += ReflectedInertia(m.qh_actuator);
  return mass;
}

Vec5 Bias(const Chain& c, const Vec5& q, const Vec5& v, double gravity) {
  Vec5 h = Vec5::Zero();
  for (int b = 0; b < 3; ++b) {
    const PointKinematics k = LinkCom(c, b, q, &v);
    h.noalias() += c.mass[b] * k.jac.transpose() *
                   (k.vel_product + Vec2(0.0, gravity));
  }
  return h;
}

ContactReport Contacts(const Chain& c, const PlanarState& s,
                       const SimConfig& cfg, Vec5* generalized) {
  ContactReport report;
  if (generalized != nullptr) generalized->setZero();
  const double sides[2] = {-1.0, 1.0};
  for (int w = 0; w < 2; ++w) {
    const PointKinematics k = WheelContact(c, sides[w], s.q);
    const double penetration = -k.pos.y();
    if (penetration <= 0.0) continue;
    const Vec2 vel = k.jac * s.v;
    const double normal = std::max(
        0.0, cfg.contact_stiffness * penetration - cfg.contact_damping * vel.y());
    if (normal <= 0.0) continue;
    const double cone = cfg.friction_coefficient * normal;
    const double tangential =
        std::clamp(-cfg.contact_damping * vel.x(), -cone, cone);
    report.normal_forces[w] = normal;
    report.tangential_forces[w] = tangential;
    (w == 0 ? report.rear_in_contact : report.front_in_contact) = true;
    if (generalized != nullptr) {
      *generalized += k.jac.transpose() * Vec2(tangential, normal);
    }
  }
  return report;
}

Vec5 ContactGeneralizedForces(const Chain& c, const Vec5& q,
                              const ContactReport& contacts) {
  Vec5 f = Vec5::Zero();
  const double sides[2] = {-1.0, 1.0};
  for (int w = 0; w < 2; ++w) {
    if (contacts.normal_forces[w] == 0.0 && contacts.tangential_forces[w] == 0.0)
      continue;
    const PointKinematics k = WheelContact(c, sides[w], q);
    f += k.jac.transpose() *
         Vec2(contacts.tangential_forces[w], contacts.normal_forces[w]);
  }
  return f;
}

Vec5 Project(const Mat5& mass, const Vec5& v, bool zero_mu, bool zero_qh) {
  int rows[2];
  int n = 0;
  if (zero_mu) rows[n++] = kMu;
  if (zero_qh) rows[n++] = kQh;
  if (n == 0) return v;
  Eigen::LLT<Mat5> llt(mass);
  if (llt.info() != Eigen::Success) {
    throw NumericalSingularityError("mass matrix is not positive definite");
  }
  Eigen::Matrix<double, kPlanarDofs, Eigen::Dynamic> st =
      Eigen::Matrix<double, kPlanarDofs, Eigen::Dynamic>::Zero(kPlanarDofs, n);
  for (int i = 0; i < n; ++i) st(rows[i], i) = 1.0;
  const Eigen::Matrix<double, kPlanarDofs, Eigen::Dynamic> minv_st =
      llt.solve(st);
  Eigen::MatrixXd delassus = st.transpose() * minv_st;
  Eigen::VectorXd joint_vel = st.transpose() * v;
  Eigen::VectorXd impulse = -delassus.ldlt().solve(joint_vel);
  Vec5 out = v + minv_st * impulse;
  for (int i = 0; i < n; ++i) out[rows[i]] = 0.0;
  return out;
}

}  // namespace

void Validate(const SimConfig& cfg) {
  if (!(cfg.dt > 0)) throw InvalidSpecError("simulation.dt must be positive");
  if (!(cfg.gravity > 0)) {
    throw InvalidSpecError("simulation.gravity must be positive");
  }
  if (!(cfg.friction_coefficient >= 0)) {
    throw InvalidSpecError("simulation.friction_coefficient must be >= 0");
  }
  if (!(cfg.contact_stiffness >= 0) || !(cfg.contact_damping >= 0)) {
    throw InvalidSpecError("contact stiffness and damping must be >= 0");
  }
}

Mat5 MassMatrix(const MorphologySpec& m, const Vec5& q) {
  return FullMassMatrix(m, MakeChain(m), q);
}

Vec5 BiasForces(const MorphologySpec& m, const Vec5& q, const Vec5& v,
                double gravity) {
  return Bias(MakeChain(m), q, v, gravity);
}

ContactReport ComputeContacts(const MorphologySpec& m, const PlanarState& s,
                              const SimConfig& cfg) {
  return Contacts(MakeChain(m), s, cfg, nullptr);
}

namespace {

Vec5 Accelerations(const MorphologySpec& m, const Chain& c,
                   const PlanarState& s, const JointPair& torques,
                   const Vec5& contact_forces, const SimConfig& cfg) {
  const Mat5 mass = FullMassMatrix(m, c, s.q);
  Vec5 rhs = contact_forces - Bias(c, s.q, s.v, cfg.gravity);
  rhs[kMu] += torques.mu;
  rhs[kQh] += torques.qh;
  Vec5 qdd = Vec5::Zero();
  if (cfg.lock_joints) {
    Eigen::LLT<Eigen::Matrix3d> llt(mass.topLeftCorner<3, 3>());
    if (llt.info() != Eigen::Success) {
      throw NumericalSingularityError("base mass matrix is not positive definite");
    }
    qdd.head<3>() = llt.solve(rhs.head<3>());
    return qdd;
  }
  Eigen::LLT<Mat5> llt(mass);
  if (llt.info() != Eigen::Success) {
    throw NumericalSingularityError("mass matrix is not positive definite");
  }
  qdd = llt.solve(rhs);
  return qdd;
}

}  // namespace

Vec5 ForwardDynamicsPlanar(const MorphologySpec& m, const PlanarState& s,
                           const JointPair& torques,
                           const ContactReport& contacts,
                           const SimConfig& cfg) {
  const Chain c = MakeChain(m);
  return Accelerations(m, c, s, torques,
                       ContactGeneralizedForces(c, s.q, contacts), cfg);
}

std::pair<PlanarState, ContactReport> Step(const MorphologySpec& m,
                                           const PlanarState& s,
                                           const JointPair& torques,
                                           const SimConfig& cfg) {
  if (!(cfg.dt > 0.0 && cfg.dt <= 1e-2)) {
    throw InvalidSpecError("simulation.dt must lie in (0, 1e-2]");
  }
  const Chain c = MakeChain(m);
  PlanarState start = s;
  if (cfg.lock_joints && (s.v[kMu] != 0.0 || s.v[kQh] != 0.0)) {
    start.v = Project(FullMassMatrix(m, c, s.q), s.v, true, true);
  }
  Vec5 contact_forces;
  const ContactReport contacts = Contacts(c, start, cfg, &contact_forces);
  const Vec5 qdd = Accelerations(m, c, start, torques, contact_forces, cfg);

  PlanarState next;
  next.v = start.v + cfg.dt * qdd;
  next.q = start.q + cfg.dt * next.v;
  next.time = s.time + cfg.dt;

  bool hit[2] = {false, false};
  const JointSpec* joints[2] = {&m.mu, &m.qh};
  const int idx[2] = {kMu, kQh};
  for (int j = 0; j < 2; ++j) {
    double& q = next.q[idx[j]];
    const double vel = next.v[idx[j]];
    if (q < joints[j]->lower) {
      q = joints[j]->lower;
      hit[j] = vel < 0.0;
    } else if (q > joints[j]->upper) {
      q = joints[j]->upper;
      hit[j] = vel > 0.0;
    }
  }
  if (hit[0] || hit[1]) {
    next.v = Project(FullMassMatrix(m, c, next.q), next.v, hit[0], hit[1]);
  }
  if (!next.q.allFinite() || !next.v.allFinite()) {
    throw DivergenceError(next.time, "planar simulation diverged");
  }
  return {next, contacts};
}

LinkPositions ComputeLinkPositions(const MorphologySpec& m, const Vec5& q) {
  const Chain c = MakeChain(m);
  LinkPositions out;
  for (int b = 0; b < 3; ++b) {
    out.com[b] = LinkCom(c, b, q, nullptr).pos;
    out.angle[b] = c.angle0[b] + c.angle_row[b].dot(q);
  }
  const Vec2 base = q.head<2>();
  out.rear_wheel = base + Rotate(q[kPitch], Vec2(-c.half_wheelbase, 0.0));
  out.front_wheel = base + Rotate(q[kPitch], Vec2(c.half_wheelbase, 0.0));
  out.mu_pivot = base + Rotate(q[kPitch], c.mount.w);
  out.qh_pivot = Evaluate(c.qh_pivot_terms, c.qh_pivot_used, q, nullptr).pos;
  return out;
}

KinematicObservables ComputeKinematicObservables(const MorphologySpec& m,
                                                 const PlanarState& s) {
  const Chain c = MakeChain(m);
  KinematicObservables obs;
  double total = 0.0;
  for (int b = 0; b < 3; ++b) {
    obs.p_com += c.mass[b] * LinkCom(c, b, s.q, nullptr).pos;
    total += c.mass[b];
  }
  obs.p_com /= total;
  obs.h_com = obs.p_com.y();
  const Vec2 rear =
      s.q.head<2>() + Rotate(s.q[kPitch], Vec2(-c.half_wheelbase, 0.0));
  obs.p_clearance = rear - Vec2(0.0, c.wheel_radius);
  obs.h_clearance = obs.p_clearance.y();
  return obs;
}

Eigen::Vector2d ComVelocity(const MorphologySpec& m, const PlanarState& s) {
  const Chain c = MakeChain(m);
  Vec2 vel = Vec2::Zero();
  double total = 0.0;
  for (int b = 0; b < 3; ++b) {
    vel += c.mass[b] * (LinkCom(c, b, s.q, nullptr).jac * s.v);
    total += c.mass[b];
  }
  return vel / total;
}

ConservedQuantities ComputeConservedQuantities(const MorphologySpec& m,
                                               const PlanarState& s,
                                               double gravity) {
  const Chain c = MakeChain(m);
  PointKinematics k[3];
  Vec2 p_com = Vec2::Zero(), v_com = Vec2::Zero();
  double total = 0.0;
  for (int b = 0; b < 3; ++b) {
    k[b] = LinkCom(c, b, s.q, nullptr);
    p_com += c.mass[b] * k[b].pos;
    v_com += c.mass[b] * (k[b].jac * s.v);
    total += c.mass[b];
  }
  p_com /= total;
  v_com /= total;

  ConservedQuantities out;
  const Mat5 mass = FullMassMatrix(m, c, s.q);
  out.mechanical_energy =
      0.5 * s.v.dot(mass * s.v) + total * gravity * p_com.y();
  for (int b = 0; b < 3; ++b) {
    const Vec2 r = k[b].pos - p_com;
    const Vec2 vr = k[b].jac * s.v - v_com;
    const double omega = c.angle_row[b].dot(s.v);
    out.centroidal_angular_momentum +=
        c.inertia[b] * omega + c.mass[b] * (r.x() * vr.y() - r.y() * vr.x());
    out.centroidal_inertia_pitch += c.inertia[b] + c.mass[b] * r.squaredNorm();
  }
  return out;
}

PlanarState GroundedState(const MorphologySpec& m, const JointPair& joints,
                          const SimConfig& cfg) {
  PlanarState s;
  const double weight = m.total_mass() * cfg.gravity;
  const double sink =
      cfg.contact_stiffness > 0 ? weight / (2.0 * cfg.contact_stiffness) : 0.0;
  s.q << 0.0, m.wheel_radius - sink, 0.0, joints.mu, joints.qh;
  return s;
}

Vec5 ProjectJointVelocities(const MorphologySpec& m, const Vec5& q,
                            const Vec5& v, bool zero_mu, bool zero_qh) {
  return Project(MassMatrix(m, q), v, zero_mu, zero_qh);
}

}  // namespace umv::core
