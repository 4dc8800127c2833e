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

#include "umv/balance/studies.h"

#include <cmath>
#include <numbers>
#include <string>

#include "umv/common/errors.h"
#include "umv/common/number_format.h"

namespace umv::balance {

namespace {

const std::vector<std::string>& BalanceMetricNames() {
  static const std::vector<std::string> names = {"xi_aggregate",
                                                 "defined_configs"};
  return names;
}

void Record(SweepPoint& point, const EffortResult& r) {
  point.metrics = {r.xi_aggregate, static_cast<double>(r.defined_count())};
}

}  // namespace

std::vector<double> PsiGrid(int points) {
  if (points < 2) throw InvalidSpecError("psi grid needs at least 2 points");
  std::vector<double> grid(points);
  const double half = std::numbers::pi / 2;
  for (int i = 0; i < points; ++i) {
    grid[i] = -half + std::numbers::pi * i / (points - 1);
  }
  grid.back() = half;
  return grid;
}

SweepResult PsiSweep(const WheelieModel& model,
                     const std::vector<double>& psi_grid,
                     const std::vector<WheelieConfig>& configs,
                     const EffortOptions& options) {
  if (psi_grid.empty()) throw InvalidSpecError("psi grid is empty");
  for (double psi : psi_grid) {
    if (!(std::abs(psi) <= std::numbers::pi / 2)) {
      throw InvalidSpecError("psi grid must lie in [-pi/2, pi/2]");
    }
  }
  SweepResult out = MakeSweepResult("balance-psi", {{"psi_hat_rad", psi_grid, {}}},
                                    BalanceMetricNames());
  const double psi_star = AxleIntersectingPsi(model);
  out.annotations["psi_star_rad"] = psi_star;
  out.annotations["config_count"] = static_cast<double>(configs.size());
  out.marked_point = std::vector<double>{psi_star};
  out.fixed_parameters = {
      {"horizon_s", FormatShortest(options.horizon)},
      {"configs", std::to_string(configs.size())},
      {"total_mass_kg", FormatShortest(model.morphology.total_mass())},
  };
  for (std::size_t i = 0; i < psi_grid.size(); ++i) {
    WheelieModel m = model;
    m.psi_hat = psi_grid[i];
    try {
      Record(out.points[i], AggregateEffort(m, configs, options));
    } catch (const AggregateUndefinedError& e) {
      MarkFailed(out.points[i], FailureKind::kUncontrollable, e.what());
    }
  }
  return out;
}

std::optional<double> PsiArgmin(const SweepResult& sweep, int config_count) {
  const std::size_t xi = sweep.metric_index("xi_aggregate");
  const std::size_t defined = sweep.metric_index("defined_configs");
  std::optional<double> best_psi;
  double best = 0.0;
  for (std::size_t i = 0; i < sweep.points.size(); ++i) {
    const SweepPoint& p = sweep.points[i];
    if (!p.ok() || p.metrics[defined] != config_count) continue;
    if (!best_psi || p.metrics[xi] < best) {
      best = p.metrics[xi];
      best_psi = sweep.axes.at(0).values[i];
    }
  }
  return best_psi;
}

DofComparison CompareDofs(const WheelieModel& model, double zeta_hat,
                          const std::vector<WheelieConfig>& configs,
                          const EffortOptions& options) {
  WheelieModel five = model;
  five.zeta_hat.reset();
  WheelieModel six = model;
  six.zeta_hat = zeta_hat;
  DofComparison out;
  out.five = AggregateEffort(five, AdaptConfigs(five, configs), options);
  out.six = AggregateEffort(six, AdaptConfigs(six, configs), options);
  out.ratio = out.six.xi_aggregate / out.five.xi_aggregate;
  return out;
}

SweepResult DofComparisonTable(const DofComparison& cmp, double zeta_hat) {
  SweepResult out = MakeSweepResult("balance-dof", {{"dofs", {5.0, 6.0}, {}}},
                                    BalanceMetricNames());
  Record(out.points[0], cmp.five);
  Record(out.points[1], cmp.six);
  out.annotations["xi_ratio"] = cmp.ratio;
  out.annotations["zeta_hat_rad"] = zeta_hat;
  out.fixed_parameters = {{"horizon_s", FormatShortest(cmp.five.horizon)}};
  return out;
}

}  // namespace umv::balance
