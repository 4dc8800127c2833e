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

#include "umv/cli/config.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"

namespace umv::cli {

using Json = nlohmann::ordered_json;

ConfigParseError::ConfigParseError(std::string source, int line, int column,
                                   const std::string& what)
    : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
            ": " + what),
      line_(line),
      column_(column) {}

ConfigValueError::ConfigValueError(std::string key, const std::string& what)
    : InvalidSpecError("config key '" + key + "': " + what), key_(std::move(key)) {}

bool OutputParams::wants(std::string_view format) const {
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

namespace {

// An object being read. Every key must be consumed; Finish() rejects the
// rest.
class Section {
 public:
  Section(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) Fail(path_, "expected an object");
  }

  std::string Key(std::string_view key) const {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const Json* Find(std::string_view key) {
    const auto it = j_.find(std::string(key));
    if (it == j_.end()) return nullptr;
    seen_.insert(std::string(key));
    return &*it;
  }

  void Finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) Fail(Key(it.key()), "unknown key");
    }
  }

  [[noreturn]] static void Fail(const std::string& key, const std::string& what) {
    throw ConfigValueError(key, what);
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

double AsNumber(const Json& v, const std::string& key) {
  if (!v.is_number()) Section::Fail(key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) Section::Fail(key, "must be finite");
  return d;
}

std::int64_t AsInteger(const Json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  const double d = AsNumber(v, key);
  if (d != std::floor(d) || std::abs(d) > 9e15) {
    Section::Fail(key, "expected an integer");
  }
  return static_cast<std::int64_t>(d);
}

std::string AsString(const Json& v, const std::string& key) {
  if (!v.is_string()) Section::Fail(key, "expected a string");
  return v.get<std::string>();
}

enum class Bound { kAny, kPositive, kNonNegative };

void Check(double v, Bound bound, const std::string& key) {
  if (bound == Bound::kPositive && !(v > 0)) Section::Fail(key, "must be positive");
  if (bound == Bound::kNonNegative && !(v >= 0)) {
    Section::Fail(key, "must be non-negative");
  }
}

void ReadNumber(Section& s, std::string_view key, double& out,
                Bound bound = Bound::kAny) {
  if (const Json* v = s.Find(key)) {
    out = AsNumber(*v, s.Key(key));
    Check(out, bound, s.Key(key));
  }
}

void ReadInt(Section& s, std::string_view key, int& out, int min_value) {
  if (const Json* v = s.Find(key)) {
    const std::int64_t i = AsInteger(*v, s.Key(key));
    if (i < min_value || i > 1000000) {
      Section::Fail(s.Key(key), "must be an integer >= " + std::to_string(min_value));
    }
    out = static_cast<int>(i);
  }
}

std::vector<double> AsNumberList(const Json& v, const std::string& key,
                                 Bound bound) {
  if (!v.is_array() || v.empty()) Section::Fail(key, "expected a non-empty array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string k = key + "[" + std::to_string(i) + "]";
    out.push_back(AsNumber(v[i], k));
    Check(out.back(), bound, k);
  }
  return out;
}

Eigen::Vector2d AsPair(const Json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2) Section::Fail(key, "expected [x, z]");
  return {AsNumber(v[0], key + "[0]"), AsNumber(v[1], key + "[1]")};
}

Json Pair(const Eigen::Vector2d& p) { return Json::array({p.x(), p.y()}); }

// --- morphology ---

void ReadCylinder(Section& parent, std::string_view name,
                  core::CylinderSpec& c) {
  const Json* v = parent.Find(name);
  if (!v) return;
  Section s(*v, parent.Key(name));
  ReadNumber(s, "length", c.length, Bound::kPositive);
  ReadNumber(s, "radius", c.radius, Bound::kNonNegative);
  ReadNumber(s, "mass", c.mass, Bound::kPositive);
  s.Finish();
}

Json EmitCylinder(const core::CylinderSpec& c) {
  return Json{{"length", c.length}, {"radius", c.radius}, {"mass", c.mass}};
}

void ReadJoint(Section& parent, std::string_view name, core::JointSpec& j) {
  const Json* v = parent.Find(name);
  if (!v) return;
  Section s(*v, parent.Key(name));
  ReadNumber(s, "lower", j.lower);
  ReadNumber(s, "upper", j.upper);
  if (const Json* m = s.Find("mount")) j.mount = AsPair(*m, s.Key("mount"));
  if (const Json* k = s.Find("kind")) {
    const std::string kind = AsString(*k, s.Key("kind"));
    if (kind == "revolute") {
      j.kind = core::JointKind::kRevolute;
    } else if (kind == "prismatic") {
      j.kind = core::JointKind::kPrismatic;
    } else {
      Section::Fail(s.Key("kind"), "expected \"revolute\" or \"prismatic\"");
    }
  }
  s.Finish();
  if (!(j.lower < j.upper)) Section::Fail(s.Key("upper"), "must exceed lower");
}

Json EmitJoint(const core::JointSpec& j) {
  return Json{{"lower", j.lower},
              {"upper", j.upper},
              {"mount", Pair(j.mount)},
              {"kind", j.kind == core::JointKind::kRevolute ? "revolute"
                                                             : "prismatic"}};
}

void ReadActuator(Section& parent, std::string_view name,
                  core::ActuatorSpec& a) {
  const Json* v = parent.Find(name);
  if (!v) return;
  Section s(*v, parent.Key(name));
  ReadNumber(s, "max_output_torque", a.max_output_torque, Bound::kNonNegative);
  ReadNumber(s, "max_output_speed", a.max_output_speed, Bound::kPositive);
  ReadNumber(s, "gear_ratio", a.gear_ratio, Bound::kPositive);
  ReadNumber(s, "rotor_inertia", a.rotor_inertia, Bound::kNonNegative);
  ReadNumber(s, "kp", a.kp, Bound::kNonNegative);
  ReadNumber(s, "kd", a.kd, Bound::kNonNegative);
  ReadInt(s, "count", a.count, 1);
  s.Finish();
}

Json EmitActuator(const core::ActuatorSpec& a) {
  return Json{{"max_output_torque", a.max_output_torque},
              {"max_output_speed", a.max_output_speed},
              {"gear_ratio", a.gear_ratio},
              {"rotor_inertia", a.rotor_inertia},
              {"kp", a.kp},
              {"kd", a.kd},
              {"count", a.count}};
}

void ReadMorphologyObject(const Json& j, const std::string& path,
                          core::MorphologySpec& m) {
  Section s(j, path);
  ReadNumber(s, "scale", m.scale, Bound::kPositive);
  ReadNumber(s, "wheel_radius", m.wheel_radius, Bound::kPositive);
  ReadNumber(s, "wheelbase", m.wheelbase, Bound::kPositive);
  if (const Json* v = s.Find("links")) {
    Section links(*v, s.Key("links"));
    ReadCylinder(links, "bike", m.bike);
    ReadCylinder(links, "neck", m.neck);
    ReadCylinder(links, "head", m.head);
    links.Finish();
  }
  if (const Json* v = s.Find("joints")) {
    Section joints(*v, s.Key("joints"));
    ReadJoint(joints, "mu", m.mu);
    ReadJoint(joints, "qh", m.qh);
    joints.Finish();
  }
  if (const Json* v = s.Find("actuators")) {
    Section acts(*v, s.Key("actuators"));
    ReadActuator(acts, "mu", m.mu_actuator);
    ReadActuator(acts, "qh", m.qh_actuator);
    acts.Finish();
  }
  s.Finish();
  try {
    core::Validate(m);
  } catch (const InvalidSpecError& e) {
    Section::Fail(path, e.what());
  }
}

Json EmitMorphologyJson(const core::MorphologySpec& m) {
  return Json{
      {"scale", m.scale},
      {"wheel_radius", m.wheel_radius},
      {"wheelbase", m.wheelbase},
      {"links",
       Json{{"bike", EmitCylinder(m.bike)},
            {"neck", EmitCylinder(m.neck)},
            {"head", EmitCylinder(m.head)}}},
      {"joints", Json{{"mu", EmitJoint(m.mu)}, {"qh", EmitJoint(m.qh)}}},
      {"actuators",
       Json{{"mu", EmitActuator(m.mu_actuator)},
            {"qh", EmitActuator(m.qh_actuator)}}}};
}

// --- text handling ---

Json ParseJson(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Convert the byte offset into a line and column.
    const std::size_t pos = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const std::size_t cut = what.find(": ");
    if (cut != std::string::npos) what = what.substr(cut + 2);
    throw ConfigParseError(source, line, column, what);
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

// --- remaining sections ---

void ReadSimulation(Section& root, core::SimConfig& sim) {
  const Json* v = root.Find("simulation");
  if (!v) return;
  Section s(*v, "simulation");
  ReadNumber(s, "dt", sim.dt, Bound::kPositive);
  ReadNumber(s, "gravity", sim.gravity, Bound::kPositive);
  ReadNumber(s, "friction_coefficient", sim.friction_coefficient,
             Bound::kNonNegative);
  ReadNumber(s, "contact_stiffness", sim.contact_stiffness, Bound::kPositive);
  ReadNumber(s, "contact_damping", sim.contact_damping, Bound::kNonNegative);
  s.Finish();
}

std::vector<core::JointPair> AsPostures(const Json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) Section::Fail(key, "expected a non-empty array");
  std::vector<core::JointPair> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Eigen::Vector2d p = AsPair(v[i], key + "[" + std::to_string(i) + "]");
    out.push_back({p.x(), p.y()});
  }
  return out;
}

Json EmitPostures(const std::vector<core::JointPair>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(Json::array({p.mu, p.qh}));
  return out;
}

void ReadJump(Section& root, jump::JumpOptions& o,
              jump::ExtensionSearchSpace& space) {
  const Json* v = root.Find("jump");
  if (!v) return;
  Section s(*v, "jump");
  ReadNumber(s, "settle_time", o.settle_time, Bound::kNonNegative);
  ReadNumber(s, "timeout", o.timeout, Bound::kPositive);
  ReadNumber(s, "onset_speed", o.onset_speed, Bound::kPositive);
  ReadNumber(s, "stance_apogee_speed", o.stance_apogee_speed, Bound::kPositive);
  ReadNumber(s, "collapse_drop", o.collapse_drop, Bound::kPositive);
  if (const Json* sv = s.Find("search")) {
    Section ss(*sv, s.Key("search"));
    if (const Json* m = ss.Find("modes")) {
      const std::string key = ss.Key("modes");
      if (!m->is_array() || m->empty()) {
        Section::Fail(key, "expected a non-empty array");
      }
      space.modes.clear();
      for (const Json& name : *m) {
        try {
          space.modes.push_back(jump::ModeFromName(AsString(name, key)));
        } catch (const ConfigValueError&) {
          throw;
        } catch (const InvalidSpecError& e) {
          Section::Fail(key, e.what());
        }
      }
    }
    if (const Json* f = ss.Find("flight")) {
      try {
        space.flight = jump::FlightModeFromName(AsString(*f, ss.Key("flight")));
      } catch (const ConfigValueError&) {
        throw;
      } catch (const InvalidSpecError& e) {
        Section::Fail(ss.Key("flight"), e.what());
      }
    }
    ReadNumber(ss, "trigger_time", space.trigger_time, Bound::kNonNegative);
    if (const Json* c = ss.Find("crouch")) {
      space.crouch = AsPostures(*c, ss.Key("crouch"));
    }
    if (const Json* e = ss.Find("extend")) {
      space.extend = AsPostures(*e, ss.Key("extend"));
    }
    if (const Json* r = ss.Find("ramp_durations")) {
      space.ramp_durations =
          AsNumberList(*r, ss.Key("ramp_durations"), Bound::kPositive);
    }
    ss.Finish();
  }
  s.Finish();
}

Json EmitJump(const jump::JumpOptions& o, const jump::ExtensionSearchSpace& sp) {
  Json modes = Json::array();
  for (auto m : sp.modes) modes.push_back(std::string(jump::ModeName(m)));
  return Json{{"settle_time", o.settle_time},
              {"timeout", o.timeout},
              {"onset_speed", o.onset_speed},
              {"stance_apogee_speed", o.stance_apogee_speed},
              {"collapse_drop", o.collapse_drop},
              {"search",
               Json{{"modes", modes},
                    {"flight", std::string(jump::FlightModeName(sp.flight))},
                    {"trigger_time", sp.trigger_time},
                    {"crouch", EmitPostures(sp.crouch)},
                    {"extend", EmitPostures(sp.extend)},
                    {"ramp_durations", sp.ramp_durations}}}};
}

void ReadBalance(Section& root, BalanceParams& b) {
  const Json* v = root.Find("balance");
  if (!v) return;
  Section s(*v, "balance");
  if (const Json* p = s.Find("psi_hat")) {
    if (p->is_null()) {
      b.psi_hat.reset();
    } else {
      b.psi_hat = AsNumber(*p, s.Key("psi_hat"));
      if (std::abs(*b.psi_hat) > std::acos(0.0)) {
        Section::Fail(s.Key("psi_hat"), "must lie in [-pi/2, pi/2]");
      }
    }
  }
  ReadNumber(s, "wheel_inertia", b.wheel_inertia, Bound::kPositive);
  if (const Json* p = s.Find("phi_pivot")) {
    if (p->is_null()) {
      b.phi_pivot.reset();
    } else {
      b.phi_pivot = AsPair(*p, s.Key("phi_pivot"));
    }
  }
  ReadNumber(s, "horizon", b.horizon, Bound::kPositive);
  ReadInt(s, "steps", b.steps, 1);
  ReadNumber(s, "eps", b.eps, Bound::kPositive);
  ReadInt(s, "config_count", b.config_count, 1);
  ReadNumber(s, "config_qh", b.config_qh);
  s.Finish();
}

Json EmitBalance(const BalanceParams& b) {
  return Json{{"psi_hat", b.psi_hat ? Json(*b.psi_hat) : Json(nullptr)},
              {"wheel_inertia", b.wheel_inertia},
              {"phi_pivot", b.phi_pivot ? Pair(*b.phi_pivot) : Json(nullptr)},
              {"horizon", b.horizon},
              {"steps", b.steps},
              {"eps", b.eps},
              {"config_count", b.config_count},
              {"config_qh", b.config_qh}};
}

void ReadOutput(Section& root, OutputParams& o) {
  const Json* v = root.Find("output");
  if (!v) return;
  Section s(*v, "output");
  if (const Json* d = s.Find("directory")) {
    o.directory = AsString(*d, s.Key("directory"));
    if (o.directory.empty()) Section::Fail(s.Key("directory"), "must not be empty");
  }
  if (const Json* f = s.Find("formats")) {
    const std::string key = s.Key("formats");
    if (!f->is_array() || f->empty()) Section::Fail(key, "expected a non-empty array");
    o.formats.clear();
    for (const Json& name : *f) {
      const std::string fmt = AsString(name, key);
      if (fmt != "csv" && fmt != "svg" && fmt != "json") {
        Section::Fail(key, "unsupported format '" + fmt + "'");
      }
      if (!o.wants(fmt)) o.formats.push_back(fmt);
    }
  }
  s.Finish();
}

// Study object: name plus the parameters of that study only.
void ReadStudy(Section& root, ExperimentConfig& c,
               const std::optional<std::string>& requested) {
  std::string name;
  const Json* v = root.Find("study");
  Json object = Json::object();
  if (v && v->is_string()) {
    name = v->get<std::string>();
  } else if (v) {
    if (!v->is_object()) Section::Fail("study", "expected a name or an object");
    object = *v;
    const auto it = object.find("name");
    if (it != object.end()) name = AsString(*it, "study.name");
  }
  if (name.empty()) {
    if (!requested) Section::Fail("study.name", "missing study name");
    name = *requested;
  }
  if (std::find(std::begin(kStudies), std::end(kStudies), name) ==
      std::end(kStudies)) {
    Section::Fail("study.name", "unknown study '" + name + "'");
  }
  if (requested && *requested != name) {
    Section::Fail("study.name", "config is for '" + name +
                                    "' but the command is '" + *requested + "'");
  }
  c.study = name;
  Section s(object, "study");
  s.Find("name");
  if (name == "sweep-mass") {
    if (const Json* l = s.Find("links")) {
      const std::string key = s.Key("links");
      if (!l->is_array() || l->empty()) Section::Fail(key, "expected a non-empty array");
      c.mass.links.clear();
      for (const Json& n : *l) {
        try {
          c.mass.links.push_back(core::LinkFromName(AsString(n, key)));
        } catch (const ConfigValueError&) {
          throw;
        } catch (const InvalidSpecError& e) {
          Section::Fail(key, e.what());
        }
      }
    }
    ReadNumber(s, "span_kg", c.mass.span_kg, Bound::kPositive);
    ReadInt(s, "points", c.mass.points, 2);
  } else if (name == "sweep-gear") {
    ReadInt(s, "points", c.gear.points, 3);
    ReadNumber(s, "half_octaves", c.gear.half_octaves, Bound::kPositive);
  } else if (name == "sweep-scale") {
    if (const Json* sc = s.Find("scales")) {
      c.scale.scales = AsNumberList(*sc, s.Key("scales"), Bound::kPositive);
    }
    if (const Json* d = s.Find("drives")) {
      const std::string key = s.Key("drives");
      if (!d->is_array() || d->empty()) Section::Fail(key, "expected a non-empty array");
      c.scale.drives.clear();
      for (const Json& n : *d) {
        const std::string drive = AsString(n, key);
        if (drive == "single") {
          c.scale.drives.push_back(jump::QhDrive::kSingle);
        } else if (drive == "coupled") {
          c.scale.drives.push_back(jump::QhDrive::kCoupled);
        } else {
          Section::Fail(key, "unknown drive '" + drive + "'");
        }
      }
    }
    if (const Json* g = s.Find("gear_ratio")) {
      if (g->is_null()) {
        c.scale.gear_ratio.reset();
      } else {
        c.scale.gear_ratio = AsNumber(*g, s.Key("gear_ratio"));
        Check(*c.scale.gear_ratio, Bound::kPositive, s.Key("gear_ratio"));
      }
    }
  } else if (name == "balance-psi") {
    ReadInt(s, "psi_points", c.balance.psi_points, 2);
  } else if (name == "balance-dof") {
    ReadNumber(s, "zeta_hat", c.balance.zeta_hat);
    if (std::abs(c.balance.zeta_hat) > std::acos(0.0)) {
      Section::Fail(s.Key("zeta_hat"), "must lie in [-pi/2, pi/2]");
    }
  }
  s.Finish();
}

Json EmitStudy(const ExperimentConfig& c) {
  Json s{{"name", c.study}};
  if (c.study == "sweep-mass") {
    Json links = Json::array();
    for (auto l : c.mass.links) links.push_back(std::string(core::LinkName(l)));
    s["links"] = links;
    s["span_kg"] = c.mass.span_kg;
    s["points"] = c.mass.points;
  } else if (c.study == "sweep-gear") {
    s["points"] = c.gear.points;
    s["half_octaves"] = c.gear.half_octaves;
  } else if (c.study == "sweep-scale") {
    Json drives = Json::array();
    for (auto d : c.scale.drives) drives.push_back(std::string(jump::DriveName(d)));
    s["scales"] = c.scale.scales;
    s["drives"] = drives;
    s["gear_ratio"] =
        c.scale.gear_ratio ? Json(*c.scale.gear_ratio) : Json(nullptr);
  } else if (c.study == "balance-psi") {
    s["psi_points"] = c.balance.psi_points;
  } else if (c.study == "balance-dof") {
    s["zeta_hat"] = c.balance.zeta_hat;
  }
  return s;
}

void CheckPostures(const ExperimentConfig& c) {
  auto within = [&](const core::JointPair& p) {
    return p.mu >= c.morphology.mu.lower && p.mu <= c.morphology.mu.upper &&
           p.qh >= c.morphology.qh.lower && p.qh <= c.morphology.qh.upper;
  };
  for (const auto& p : c.search.crouch) {
    if (!within(p)) Section::Fail("jump.search.crouch", "posture outside joint limits");
  }
  for (const auto& p : c.search.extend) {
    if (!within(p)) Section::Fail("jump.search.extend", "posture outside joint limits");
  }
}

}  // namespace

ExperimentConfig ParseConfig(std::string_view text,
                             std::optional<std::string> study,
                             const std::string& source,
                             const std::string& base_dir) {
  const Json j = ParseJson(text, source);
  ExperimentConfig c;
  Section root(j, "");
  ReadStudy(root, c, study);
  if (const Json* s = root.Find("seed")) c.seed = AsInteger(*s, "seed");
  if (const Json* m = root.Find("morphology")) {
    if (m->is_string()) {
      const std::filesystem::path p =
          std::filesystem::path(base_dir) / m->get<std::string>();
      const std::string file_text = ReadFile(p.string());
      ReadMorphologyObject(ParseJson(file_text, p.string()), "morphology",
                           c.morphology);
    } else {
      ReadMorphologyObject(*m, "morphology", c.morphology);
    }
  }
  ReadSimulation(root, c.simulation);
  ReadJump(root, c.jump, c.search);
  ReadBalance(root, c.balance);
  ReadOutput(root, c.output);
  root.Finish();
  CheckPostures(c);
  return c;
}

ExperimentConfig LoadConfig(const std::string& path,
                            std::optional<std::string> study) {
  const std::string text = ReadFile(path);
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  return ParseConfig(text, std::move(study), path,
                     dir.empty() ? "." : dir.string());
}

std::string EmitConfig(const ExperimentConfig& c) {
  const Json j{
      {"study", EmitStudy(c)},
      {"seed", c.seed},
      {"morphology", EmitMorphologyJson(c.morphology)},
      {"simulation",
       Json{{"dt", c.simulation.dt},
            {"gravity", c.simulation.gravity},
            {"friction_coefficient", c.simulation.friction_coefficient},
            {"contact_stiffness", c.simulation.contact_stiffness},
            {"contact_damping", c.simulation.contact_damping}}},
      {"jump", EmitJump(c.jump, c.search)},
      {"balance", EmitBalance(c.balance)},
      {"output", Json{{"directory", c.output.directory},
                      {"formats", c.output.formats}}}};
  return Dump(j);
}

std::string EmitMorphology(const core::MorphologySpec& m) {
  return Dump(EmitMorphologyJson(m));
}

core::MorphologySpec ParseMorphology(std::string_view text,
                                     const std::string& source) {
  core::MorphologySpec m = core::NominalMorphology();
  ReadMorphologyObject(ParseJson(text, source), "morphology", m);
  return m;
}

std::string Fnv1aHex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ConfigHash(const ExperimentConfig& config) {
  return Fnv1aHex(EmitConfig(config));
}

}  // namespace umv::cli
