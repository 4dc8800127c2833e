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
#include "umv/jump/studies.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <limits>
#include <sstream>

#include "umv/common/errors.h"
#include "umv/common/parallel.h"

namespace umv::jump {
namespace {

std::string Num(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

void FillMetrics(SweepPoint& point, const JumpMetrics& m) {
  // Extra study-specific columns after these keep their slots.
  const double values[] = {m.max_h_com, m.max_h_clearance, m.contact_ratio,
                           m.peak_mechanical_power, m.lifted_off ? 1.0 : 0.0};
  std::copy(std::begin(values), std::end(values), point.metrics.begin());
}

// Evaluates one design per grid slot. Errors become typed failure markers.
void RunPoints(SweepResult& result, const core::SimConfig& cfg,
               const StudyOptions& options,
               const std::function<core::MorphologySpec(std::size_t)>& design) {
  ParallelFor(result.points.size(), options.workers, [&](std::size_t i) {
    SweepPoint& point = result.points[i];
    try {
      FillMetrics(point, EvaluateDesign(design(i), cfg, options));
    } catch (const DivergenceError& e) {
      MarkFailed(point, FailureKind::kDiverged, e.what());
    } catch (const NumericalSingularityError& e) {
      MarkFailed(point, FailureKind::kSingular, e.what());
    } catch (const InvalidSpecError& e) {
      MarkFailed(point, FailureKind::kInvalid, e.what());
    } catch (const Error& e) {
      MarkFailed(point, FailureKind::kOther, e.what());
    }
  });
}

void SnapshotCommon(SweepResult& r, const core::MorphologySpec& m,
                    const core::SimConfig& cfg) {
  r.fixed_parameters.emplace_back("total_mass_kg", Num(m.total_mass()));
  r.fixed_parameters.emplace_back("scale", Num(m.scale));
  r.fixed_parameters.emplace_back("gr_alpha", Num(m.mu_actuator.gear_ratio));
  r.fixed_parameters.emplace_back("gr_beta", Num(m.qh_actuator.gear_ratio));
  r.fixed_parameters.emplace_back("dt_s", Num(cfg.dt));
}

}  // namespace

const std::vector<std::string>& JumpMetricNames() {
  static const std::vector<std::string> names = {
      "max_h_com_m", "max_h_clearance_m", "contact_ratio", "peak_power_w",
      "lifted_off"};
  return names;
}

JumpMetrics EvaluateDesign(const core::MorphologySpec& m,
                           const core::SimConfig& cfg,
                           const StudyOptions& options) {
  return OptimizeExtensionProfile(m, cfg, options.space, options.jump).second;
}

SweepResult MassSensitivitySweep(const core::MorphologySpec& m,
                                 core::LinkId link,
                                 const std::vector<double>& masses,
                                 const core::SimConfig& cfg,
                                 const StudyOptions& options) {
  for (double mass : masses) {
    if (!(mass > 0)) throw InvalidSpecError("sweep masses must be positive");
  }
  SweepResult r = MakeSweepResult(
      "sweep-mass",
      {SweepAxis{std::string(core::LinkName(link)) + "_mass_kg", masses, {}}},
      JumpMetricNames());
  SnapshotCommon(r, m, cfg);
  r.fixed_parameters.emplace_back("link", std::string(core::LinkName(link)));
  r.marked_point = std::vector<double>{m.link(link).mass};
  RunPoints(r, cfg, options, [&](std::size_t i) {
    return core::WithLinkMass(m, link, masses[i]);
  });
  return r;
}

SweepResult MassSensitivityStudy(const core::MorphologySpec& m,
                                 const std::vector<core::LinkId>& links,
                                 const std::vector<double>& deltas,
                                 const core::SimConfig& cfg,
                                 const StudyOptions& options) {
  if (links.empty()) throw InvalidSpecError("mass study needs a link");
  SweepAxis link_axis{"link", {}, {}};
  for (std::size_t i = 0; i < links.size(); ++i) {
    link_axis.values.push_back(static_cast<double>(i));
    link_axis.labels.emplace_back(core::LinkName(links[i]));
  }
  std::vector<std::string> metrics = JumpMetricNames();
  metrics.push_back("mass_kg");
  SweepResult r = MakeSweepResult(
      "sweep-mass", {link_axis, SweepAxis{"mass_delta_kg", deltas, {}}},
      metrics);
  SnapshotCommon(r, m, cfg);
  auto mass_at = [&](std::size_t i) {
    const auto c = r.coords(i);
    return m.link(links[c[0]]).mass + deltas[c[1]];
  };
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    if (!(mass_at(i) > 0)) throw InvalidSpecError("sweep masses must be positive");
  }
  RunPoints(r, cfg, options, [&](std::size_t i) {
    return core::WithLinkMass(m, links[r.coords(i)[0]], mass_at(i));
  });
  const std::size_t h = r.metric_index("max_h_com_m");
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    if (r.points[i].ok()) r.points[i].metrics.back() = mass_at(i);
  }
  for (std::size_t l = 0; l < links.size(); ++l) {
    std::vector<double> x, y;
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      const std::size_t i = r.index({l, k});
      x.push_back(mass_at(i));
      y.push_back(r.points[i].ok() ? r.points[i].metrics[h]
                                   : std::numeric_limits<double>::quiet_NaN());
    }
    r.annotations["slope_" + std::string(core::LinkName(links[l])) +
                  "_m_per_kg"] = LeastSquaresSlope(x, y);
  }
  return r;
}

SweepResult GearRatioLandscape(const core::MorphologySpec& m,
                               const std::vector<double>& gr_alpha,
                               const std::vector<double>& gr_beta,
                               const core::SimConfig& cfg,
                               const StudyOptions& options) {
  for (double g : gr_alpha) {
    if (!(g > 0)) throw InvalidSpecError("gear ratios must be positive");
  }
  for (double g : gr_beta) {
    if (!(g > 0)) throw InvalidSpecError("gear ratios must be positive");
  }
  SweepResult r = MakeSweepResult(
      "sweep-gear",
      {SweepAxis{"gr_alpha", gr_alpha, {}}, SweepAxis{"gr_beta", gr_beta, {}}},
      JumpMetricNames());
  SnapshotCommon(r, m, cfg);
  r.marked_point = std::vector<double>{m.mu_actuator.gear_ratio,
                                       m.qh_actuator.gear_ratio};
  RunPoints(r, cfg, options, [&](std::size_t i) {
    const auto c = r.coords(i);
    core::MorphologySpec design = m;
    design.mu_actuator = core::WithGearRatio(m.mu_actuator, gr_alpha[c[0]]);
    design.qh_actuator = core::WithGearRatio(m.qh_actuator, gr_beta[c[1]]);
    return design;
  });
  return r;
}

std::vector<double> GearGrid(double nominal, int points, double half_octaves) {
  if (points < 1 || !(nominal > 0)) {
    throw InvalidSpecError("gear grid needs a positive nominal and points");
  }
  std::vector<double> grid(points);
  const int mid = points / 2;
  for (int i = 0; i < points; ++i) {
    const double exponent =
        mid == 0 ? 0.0 : half_octaves * static_cast<double>(i - mid) / mid;
    grid[i] = i == mid ? nominal : nominal * std::exp2(exponent);
  }
  return grid;
}

std::string_view DriveName(QhDrive drive) {
  return drive == QhDrive::kCoupled ? "coupled" : "single";
}

namespace {

core::MorphologySpec ScaledDesign(const core::MorphologySpec& m, double scale,
                                  QhDrive drive,
                                  std::optional<double> gear_ratio) {
  core::MorphologySpec design = core::BuildMorphology(m, scale / m.scale);
  if (gear_ratio) {
    design.mu_actuator = core::WithGearRatio(design.mu_actuator, *gear_ratio);
    design.qh_actuator = core::WithGearRatio(design.qh_actuator, *gear_ratio);
  }
  design.qh_actuator.count = drive == QhDrive::kCoupled ? 2 : 1;
  return design;
}

}  // namespace

SweepResult ScaleStudy(const core::MorphologySpec& m,
                       const std::vector<double>& scales, QhDrive drive,
                       const core::SimConfig& cfg, const StudyOptions& options,
                       std::optional<double> gear_ratio) {
  return ScaleStudyComparison(m, scales, {drive}, cfg, options, gear_ratio);
}

SweepResult ScaleStudyComparison(const core::MorphologySpec& m,
                                 const std::vector<double>& scales,
                                 const std::vector<QhDrive>& drives,
                                 const core::SimConfig& cfg,
                                 const StudyOptions& options,
                                 std::optional<double> gear_ratio) {
  for (double s : scales) {
    if (!(s > 0)) throw InvalidSpecError("scales must be positive");
  }
  std::vector<double> counts;
  for (QhDrive d : drives) counts.push_back(d == QhDrive::kCoupled ? 2.0 : 1.0);
  std::vector<SweepAxis> axes;
  if (drives.size() > 1) axes.push_back(SweepAxis{"qh_count", counts, {}});
  axes.push_back(SweepAxis{"scale", scales, {}});
  SweepResult r = MakeSweepResult("sweep-scale", axes, JumpMetricNames());
  SnapshotCommon(r, m, cfg);
  if (gear_ratio) r.fixed_parameters.emplace_back("gear_ratio", Num(*gear_ratio));
  if (drives.size() == 1) {
    r.fixed_parameters.emplace_back("qh_drive", std::string(DriveName(drives[0])));
  }
  RunPoints(r, cfg, options, [&](std::size_t i) {
    const auto c = r.coords(i);
    const QhDrive drive = drives.size() > 1 ? drives[c[0]] : drives[0];
    return ScaledDesign(m, scales[c.back()], drive, gear_ratio);
  });
  return r;
}

std::vector<double> LinearGrid(double lo, double hi, int points) {
  if (points < 1) throw InvalidSpecError("grid needs at least one point");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    g[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  }
  return g;
}

}  // namespace umv::jump
