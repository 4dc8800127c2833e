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

#include "umv/cli/runner.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "json.hpp"
#include "umv/balance/studies.h"
#include "umv/cli/output.h"
#include "umv/common/number_format.h"
#include "umv/jump/studies.h"

#ifndef UMV_VERSION
#define UMV_VERSION "dev"
#endif

namespace umv::cli {

namespace {

jump::StudyOptions StudyOptionsOf(const ExperimentConfig& c, int workers) {
  jump::StudyOptions o;
  o.space = c.search;
  o.jump = c.jump;
  o.workers = workers;
  return o;
}

balance::EffortOptions EffortOptionsOf(const ExperimentConfig& c, int workers) {
  balance::EffortOptions o;
  o.horizon = c.balance.horizon;
  o.steps = c.balance.steps;
  o.eps = c.balance.eps;
  o.workers = workers;
  return o;
}

}  // namespace

JumpRun ComputeJump(const ExperimentConfig& c) {
  JumpRun run;
  std::tie(run.policy, run.metrics) = jump::OptimizeExtensionProfile(
      c.morphology, c.simulation, c.search, c.jump);
  run.trace = jump::SimulateJump(c.morphology, run.policy, c.simulation, c.jump);
  run.table = MakeSweepResult("jump", {{"scale", {c.morphology.scale}, {}}},
                              jump::JumpMetricNames());
  const jump::JumpMetrics& m = run.metrics;
  run.table.points[0].metrics = {m.max_h_com, m.max_h_clearance,
                                 m.contact_ratio, m.peak_mechanical_power,
                                 m.lifted_off ? 1.0 : 0.0};
  run.table.annotations["t0_s"] = run.trace.t0;
  run.table.annotations["t_liftoff_s"] = run.trace.t_liftoff;
  run.table.annotations["t_apogee_s"] = run.trace.t_apogee;
  run.table.fixed_parameters = {
      {"mode", std::string(jump::ModeName(run.policy.mode))},
      {"crouch_mu_rad", FormatShortest(run.policy.crouch.mu)},
      {"crouch_qh_rad", FormatShortest(run.policy.crouch.qh)},
      {"extend_mu_rad", FormatShortest(run.policy.extend.mu)},
      {"extend_qh_rad", FormatShortest(run.policy.extend.qh)},
      {"ramp_duration_s", FormatShortest(run.policy.ramp_duration)}};
  return run;
}

balance::WheelieModel BalanceModel(const ExperimentConfig& c) {
  balance::WheelieModel model;
  model.morphology = c.morphology;
  model.wheel_inertia = c.balance.wheel_inertia;
  model.phi_pivot = c.balance.phi_pivot;
  model.gravity = c.simulation.gravity;
  model.psi_hat = c.balance.psi_hat ? *c.balance.psi_hat
                                    : balance::AxleIntersectingPsi(model);
  return model;
}

std::vector<balance::WheelieConfig> BalanceConfigs(
    const ExperimentConfig& c, const balance::WheelieModel& model) {
  return balance::DefaultWheelieConfigs(model, c.balance.config_count,
                                        c.balance.config_qh);
}

SweepResult ComputeSweep(const ExperimentConfig& c, int workers) {
  const auto& m = c.morphology;
  if (c.study == "sweep-mass") {
    const auto deltas =
        jump::LinearGrid(-c.mass.span_kg, c.mass.span_kg, c.mass.points);
    return jump::MassSensitivityStudy(m, c.mass.links, deltas, c.simulation,
                                      StudyOptionsOf(c, workers));
  }
  if (c.study == "sweep-gear") {
    const auto alpha =
        jump::GearGrid(m.mu_actuator.gear_ratio, c.gear.points, c.gear.half_octaves);
    const auto beta =
        jump::GearGrid(m.qh_actuator.gear_ratio, c.gear.points, c.gear.half_octaves);
    return jump::GearRatioLandscape(m, alpha, beta, c.simulation,
                                    StudyOptionsOf(c, workers));
  }
  if (c.study == "sweep-scale") {
    return jump::ScaleStudyComparison(m, c.scale.scales, c.scale.drives,
                                      c.simulation, StudyOptionsOf(c, workers),
                                      c.scale.gear_ratio);
  }
  if (c.study == "balance-psi") {
    const auto model = BalanceModel(c);
    const auto configs = BalanceConfigs(c, model);
    SweepResult r = balance::PsiSweep(model, balance::PsiGrid(c.balance.psi_points),
                                      configs, EffortOptionsOf(c, workers));
    const auto best = balance::PsiArgmin(r, static_cast<int>(configs.size()));
    r.annotations["psi_argmin_rad"] =
        best ? *best : std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  if (c.study == "balance-dof") {
    const auto model = BalanceModel(c);
    const auto configs = BalanceConfigs(c, model);
    const auto cmp = balance::CompareDofs(model, c.balance.zeta_hat, configs,
                                          EffortOptionsOf(c, workers));
    return balance::DofComparisonTable(cmp, c.balance.zeta_hat);
  }
  throw ConfigValueError("study.name", "'" + c.study + "' is not a sweep");
}

namespace {

using Json = nlohmann::ordered_json;

Json FailureSummary(const SweepResult& r) {
  std::map<std::string, int> by_kind;
  Json points = Json::array();
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const SweepPoint& p = r.points[i];
    if (p.ok()) continue;
    const std::string kind(FailureName(p.failure));
    ++by_kind[kind];
    Json coords = Json::object();
    const auto c = r.coords(i);
    for (std::size_t a = 0; a < r.axes.size(); ++a) {
      const SweepAxis& axis = r.axes[a];
      coords[axis.name] = axis.labels.empty() ? Json(axis.values[c[a]])
                                              : Json(axis.labels[c[a]]);
    }
    points.push_back(
        Json{{"index", i}, {"at", coords}, {"failure", kind}, {"detail", p.detail}});
  }
  Json kinds = Json::object();
  for (const auto& [k, n] : by_kind) kinds[k] = n;
  return Json{{"points", r.points.size()},
              {"failed", r.failure_count()},
              {"by_kind", kinds},
              {"failed_points", points}};
}

// NaN and infinities are not JSON numbers.
Json Number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

RunReport Run(const ExperimentConfig& c, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  OutputWriter writer(c.output.directory);  // fails before any compute
  report.directory = writer.directory().string();
  auto warn = [&](const std::string& w) {
    report.warnings.push_back(w);
    if (options.log) *options.log << "warning: " << w << "\n";
  };

  SweepResult table;
  if (c.study == "jump") {
    JumpRun run = ComputeJump(c);
    if (c.output.wants("json")) {
      writer.Write("trace.json", FormatTraceJson(run.trace, run.policy));
    }
    if (c.output.wants("svg")) writer.Write("plot.svg", RenderTraceSvg(run.trace));
    table = std::move(run.table);
  } else {
    table = ComputeSweep(c, options.workers);
    if (c.output.wants("svg")) {
      std::string warning;
      if (auto svg = RenderSweepSvg(table, &warning)) {
        writer.Write("plot.svg", *svg);
      } else {
        warn(warning);
      }
    }
  }
  if (c.output.wants("csv")) writer.Write("results.csv", FormatCsv(table));
  if (c.output.wants("json")) writer.Write("config.json", EmitConfig(c));

  report.failures = table.failure_count();
  if (report.failures > 0) {
    warn(std::to_string(report.failures) + " of " +
         std::to_string(table.points.size()) + " points failed");
  }

  Json annotations = Json::object();
  for (const auto& [k, v] : table.annotations) annotations[k] = Number(v);
  Json fixed = Json::object();
  for (const auto& [k, v] : table.fixed_parameters) fixed[k] = v;
  std::vector<std::string> files = writer.files();
  files.push_back("manifest.json");
  const double duration =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const Json manifest{{"toolkit", "umv_design"},
                      {"version", UMV_VERSION},
                      {"study", c.study},
                      {"config_hash", ConfigHash(c)},
                      {"seed", c.seed},
                      {"duration_s", duration},
                      {"failures", FailureSummary(table)},
                      {"annotations", annotations},
                      {"fixed_parameters", fixed},
                      {"warnings", report.warnings},
                      {"files", files}};
  writer.Write("manifest.json", manifest.dump(2) + "\n");
  report.files = writer.files();
  report.exit_code =
      (options.strict && report.failures > 0) ? kExitPointsFailed : kExitOk;
  return report;
}

}  // namespace umv::cli
