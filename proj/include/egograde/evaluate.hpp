// Copyright 2026 The Egograde Authors
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

#ifndef EGOGRADE_EVALUATE_HPP_
#define EGOGRADE_EVALUATE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egograde/baseline.hpp"
#include "egograde/metrics.hpp"
#include "egograde/occupancy.hpp"
#include "egograde/scenario_io.hpp"

namespace egograde
{

/// Everything computed at one eval_time. A frame that could not be
/// evaluated is kept with `skipped` set and the reason in `diagnostic`.
struct FrameResult
{
  double eval_time = 0.0;
  bool skipped = false;
  std::string diagnostic;
  MetricResult metrics;
  DisplacementReport displacement;
};

/// Cross-frame aggregate for one actor. Worst values are maxima over the
/// frames where the quantity was defined; an actor with no defined frame
/// stays unscored (nullopt).
struct ActorSummary
{
  std::string id;
  bool is_aoi = false;
  bool is_unsafe = false;
  bool in_roi = false;
  bool missing_prediction = false;
  std::optional<double> worst_p_lambda;
  std::map<double, double> worst_l2_at;
  std::optional<double> worst_ade;
  std::optional<double> worst_fde;
};

struct EvaluationRun
{
  std::string scenario_id;
  std::vector<FrameResult> frames;
  std::vector<ActorSummary> actors;
};

/// Truncates every predicted track to the states within `keep_horizon`
/// seconds of its own first state; zeroes direct-grid slices past the
/// corresponding step.
PredictionSet cripple_predictions(
  const PredictionSet & preds, double keep_horizon, const GridSpec & spec);

/// Runs the full per-frame loop: re-mesh at the ego's current position,
/// build fields, generate the trajectory ensemble, compute the ratio
/// metrics and displacement baselines, and aggregate per actor.
EvaluationRun evaluate_scenario(const Scenario & scenario, const EngineConfig & config);

void save_runs(
  const std::vector<EvaluationRun> & runs, const EngineConfig & config,
  const std::filesystem::path & file);

std::vector<EvaluationRun> load_runs(const std::filesystem::path & file);

}  // namespace egograde

#endif  // EGOGRADE_EVALUATE_HPP_
