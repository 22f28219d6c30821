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

#include "egograde/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "egograde/errors.hpp"
#include "egograde/path_frame.hpp"

namespace egograde
{

namespace
{

using nlohmann::json;

constexpr double kTimeTol = 1e-9;

json optional_to_json(const std::optional<double> & v)
{
  if (v) {
    return *v;
  }
  return nullptr;
}

std::optional<double> optional_from_json(const json & j)
{
  if (j.is_null()) {
    return std::nullopt;
  }
  return j.get<double>();
}

void merge_worst(std::optional<double> & worst, const std::optional<double> & value)
{
  if (value && (!worst || *value > *worst)) {
    worst = *value;
  }
}

}  // namespace

PredictionSet cripple_predictions(
  const PredictionSet & preds, double keep_horizon, const GridSpec & spec)
{
  if (keep_horizon < 0.0) {
    throw ConfigError("keep_horizon must be >= 0");
  }
  PredictionSet out;
  for (const auto & [actor_id, modes] : preds.modes) {
    std::vector<PredictionMode> kept_modes;
    for (const auto & mode : modes) {
      PredictionMode kept;
      kept.weight = mode.weight;
      kept.track.id = mode.track.id;
      kept.track.cls = mode.track.cls;
      const double cutoff = mode.track.start_time() + keep_horizon + kTimeTol;
      for (const auto & state : mode.track.states) {
        if (state.t <= cutoff) {
          kept.track.states.push_back(state);
        }
      }
      if (!kept.track.states.empty()) {
        kept_modes.push_back(std::move(kept));
      }
    }
    if (!kept_modes.empty()) {
      out.modes.emplace(actor_id, std::move(kept_modes));
    }
  }
  if (preds.grid) {
    DirectGrid grid = *preds.grid;
    const int plane = grid.along_dim * grid.cross_dim;
    for (int k = 0; k < grid.t_dim; ++k) {
      if (k * spec.dt > keep_horizon + kTimeTol) {
        std::fill_n(grid.values.begin() + static_cast<std::ptrdiff_t>(k) * plane, plane, 0.0);
      }
    }
    out.grid = std::move(grid);
  }
  return out;
}

EvaluationRun evaluate_scenario(const Scenario & scenario, const EngineConfig & config)
{
  config.validate();
  scenario.predictions.validate();
  for (const auto & track : scenario.ground_truth) {
    track.validate();
  }

  EvaluationRun run;
  run.scenario_id = scenario.id;

  const auto ego_pr =
    project_to_path(scenario.nominal_path, 0.0, scenario.ego.pose.center);
  if (std::abs(ego_pr.cross) >= 0.5 * config.grid.cross_extent) {
    throw InputError(
      "scenario '" + scenario.id + "': ego pose lies outside the grid's cross range");
  }

  // The ensemble depends only on speed and cross offset, both constant
  // across frames, so it is built once.
  const TrajectoryEnsemble ensemble = generate_beelines(
    config.dist, config.sampling, scenario.ego.v, scenario.ego.pose.length,
    scenario.ego.pose.width, ego_pr.cross, config.grid);

  std::map<std::string, ActorSummary> summaries;
  auto summary_of = [&](const ActorTrack & track) -> ActorSummary & {
    auto [it, inserted] = summaries.try_emplace(track.id);
    if (inserted) {
      it->second.id = track.id;
      it->second.is_aoi = track.is_aoi;
      it->second.is_unsafe = track.is_unsafe;
      it->second.missing_prediction = true;
    }
    return it->second;
  };

  for (double eval_time : scenario.eval_times) {
    FrameResult frame;
    frame.eval_time = eval_time;
    try {
      if (scenario.predictions.grid && eval_time != 0.0) {
        throw InputError("direct-grid predictions support only eval_time 0");
      }
      const double origin = ego_pr.along + scenario.ego.v * eval_time;
      const CurvilinearMesh mesh =
        build_curvilinear_mesh(scenario.nominal_path, config.grid, origin);

      const GtFields gt = build_gt_field(scenario, eval_time, mesh, config.grid);
      const OccupancyField pred =
        build_pred_field(scenario.predictions, eval_time, mesh, config.grid);

      frame.metrics = evaluate_metrics(ensemble, pred, gt, config.metrics);

      for (const auto & track : scenario.ground_truth) {
        auto modes_it = scenario.predictions.modes.find(track.id);
        const std::vector<PredictionMode> no_modes;
        const auto & modes =
          modes_it != scenario.predictions.modes.end() ? modes_it->second : no_modes;
        DisplacementEntry entry = displacement_errors(
          track, modes, config.baseline.horizons, eval_time, config.baseline.min_over_modes);
        entry.in_roi = roi_filter(track, scenario.nominal_path, mesh, eval_time);
        frame.displacement.emplace(track.id, std::move(entry));
      }

      for (const auto & track : scenario.ground_truth) {
        ActorSummary & summary = summary_of(track);
        const auto metric_it = frame.metrics.per_actor.find(track.id);
        if (metric_it != frame.metrics.per_actor.end()) {
          merge_worst(summary.worst_p_lambda, metric_it->second);
        }
        const DisplacementEntry & entry = frame.displacement.at(track.id);
        summary.in_roi = summary.in_roi || entry.in_roi;
        summary.missing_prediction = summary.missing_prediction && entry.missing_prediction;
        for (const auto & [horizon, l2] : entry.l2_at) {
          auto [it, inserted] = summary.worst_l2_at.try_emplace(horizon, l2);
          if (!inserted) {
            it->second = std::max(it->second, l2);
          }
        }
        merge_worst(summary.worst_ade, entry.ade);
        merge_worst(summary.worst_fde, entry.fde);
      }
    } catch (const Error & e) {
      frame.skipped = true;
      frame.diagnostic = e.what();
    }
    run.frames.push_back(std::move(frame));
  }

  run.actors.reserve(summaries.size());
  for (auto & [id, summary] : summaries) {
    run.actors.push_back(std::move(summary));
  }
  return run;
}

void save_runs(
  const std::vector<EvaluationRun> & runs, const EngineConfig & config,
  const std::filesystem::path & file)
{
  json j;
  j["schema_version"] = 1;
  j["config"] = json::parse(config_to_json_string(config));

  json scenarios = json::array();
  for (const EvaluationRun & run : runs) {
    json frames = json::array();
    for (const FrameResult & frame : run.frames) {
      json f;
      f["eval_time"] = frame.eval_time;
      if (frame.skipped) {
        f["skipped"] = true;
        f["diagnostic"] = frame.diagnostic;
        frames.push_back(std::move(f));
        continue;
      }
      f["p_lambda"] = optional_to_json(frame.metrics.p_lambda);
      f["p_zeta"] = optional_to_json(frame.metrics.p_zeta);
      json per_actor = json::object();
      for (const auto & [id, value] : frame.metrics.per_actor) {
        per_actor[id] = optional_to_json(value);
      }
      f["per_actor"] = std::move(per_actor);
      f["lambda_numerator"] = frame.metrics.lambda_numerator;
      f["lambda_denominator"] = frame.metrics.lambda_denominator;
      f["zeta_numerator"] = frame.metrics.zeta_numerator;
      f["zeta_denominator"] = frame.metrics.zeta_denominator;
      json displacement = json::object();
      for (const auto & [id, entry] : frame.displacement) {
        json d;
        d["in_roi"] = entry.in_roi;
        d["missing_prediction"] = entry.missing_prediction;
        json l2 = json::object();
        for (const auto & [horizon, value] : entry.l2_at) {
          l2[json(horizon).dump()] = value;
        }
        d["l2_at"] = std::move(l2);
        d["ade"] = optional_to_json(entry.ade);
        d["fde"] = optional_to_json(entry.fde);
        displacement[id] = std::move(d);
      }
      f["displacement"] = std::move(displacement);
      frames.push_back(std::move(f));
    }

    json actors = json::array();
    for (const ActorSummary & actor : run.actors) {
      json a;
      a["id"] = actor.id;
      a["is_aoi"] = actor.is_aoi;
      a["is_unsafe"] = actor.is_unsafe;
      a["in_roi"] = actor.in_roi;
      a["missing_prediction"] = actor.missing_prediction;
      a["worst_p_lambda"] = optional_to_json(actor.worst_p_lambda);
      json l2 = json::object();
      for (const auto & [horizon, value] : actor.worst_l2_at) {
        l2[json(horizon).dump()] = value;
      }
      a["worst_l2_at"] = std::move(l2);
      a["worst_ade"] = optional_to_json(actor.worst_ade);
      a["worst_fde"] = optional_to_json(actor.worst_fde);
      actors.push_back(std::move(a));
    }

    scenarios.push_back(
      json{{"scenario_id", run.scenario_id}, {"frames", std::move(frames)},
           {"actors", std::move(actors)}});
  }
  j["scenarios"] = std::move(scenarios);

  std::ofstream out(file);
  if (!out) {
    throw InputError("cannot write " + file.string());
  }
  out << j.dump(2) << "\n";
}

std::vector<EvaluationRun> load_runs(const std::filesystem::path & file)
{
  std::ifstream in(file);
  if (!in) {
    throw InputError("cannot open " + file.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error & e) {
    throw InputError("invalid JSON in " + file.string() + ": " + e.what());
  }

  std::vector<EvaluationRun> runs;
  try {
    for (const auto & s : j.at("scenarios")) {
      EvaluationRun run;
      run.scenario_id = s.at("scenario_id").get<std::string>();
      for (const auto & f : s.at("frames")) {
        FrameResult frame;
        frame.eval_time = f.at("eval_time").get<double>();
        frame.skipped = f.value("skipped", false);
        if (frame.skipped) {
          frame.diagnostic = f.value("diagnostic", "");
        } else {
          frame.metrics.p_lambda = optional_from_json(f.at("p_lambda"));
          frame.metrics.p_zeta = optional_from_json(f.at("p_zeta"));
          for (const auto & [id, value] : f.at("per_actor").items()) {
            frame.metrics.per_actor[id] = optional_from_json(value);
          }
        }
        run.frames.push_back(std::move(frame));
      }
      for (const auto & a : s.at("actors")) {
        ActorSummary actor;
        actor.id = a.at("id").get<std::string>();
        actor.is_aoi = a.at("is_aoi").get<bool>();
        actor.is_unsafe = a.at("is_unsafe").get<bool>();
        actor.in_roi = a.at("in_roi").get<bool>();
        actor.missing_prediction = a.at("missing_prediction").get<bool>();
        actor.worst_p_lambda = optional_from_json(a.at("worst_p_lambda"));
        for (const auto & [horizon, value] : a.at("worst_l2_at").items()) {
          actor.worst_l2_at[std::stod(horizon)] = value.get<double>();
        }
        actor.worst_ade = optional_from_json(a.at("worst_ade"));
        actor.worst_fde = optional_from_json(a.at("worst_fde"));
        run.actors.push_back(std::move(actor));
      }
      runs.push_back(std::move(run));
    }
  } catch (const json::exception & e) {
    throw InputError("malformed run report " + file.string() + ": " + e.what());
  }
  return runs;
}

}  // namespace egograde
