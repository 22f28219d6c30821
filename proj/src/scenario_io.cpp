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

#include "egograde/scenario_io.hpp"

#include <fstream>

#include <json.hpp>

#include "egograde/errors.hpp"

namespace egograde
{

namespace
{

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json load_json_file(const std::filesystem::path & file)
{
  std::ifstream in(file);
  if (!in) {
    throw InputError("cannot open " + file.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error & e) {
    throw InputError("invalid JSON in " + file.string() + ": " + e.what());
  }
}

ActorState state_from_json(const json & j)
{
  ActorState s;
  s.t = j.at("t").get<double>();
  s.box.center = Vec2{j.at("x").get<double>(), j.at("y").get<double>()};
  s.box.heading = j.at("heading").get<double>();
  s.box.length = j.at("length").get<double>();
  s.box.width = j.at("width").get<double>();
  return s;
}

json state_to_json(const ActorState & s)
{
  return json{
    {"t", s.t},
    {"x", s.box.center.x()},
    {"y", s.box.center.y()},
    {"heading", s.box.heading},
    {"length", s.box.length},
    {"width", s.box.width}};
}

std::vector<ActorState> states_from_json(const json & j)
{
  std::vector<ActorState> states;
  states.reserve(j.size());
  for (const auto & item : j) {
    states.push_back(state_from_json(item));
  }
  return states;
}

}  // namespace

void EngineConfig::validate() const
{
  grid.validate();
  metrics.validate();
  if (dist.theta_max <= 0.0 || dist.accel_sigma <= 0.0 || dist.accel_max <= 0.0) {
    throw ConfigError("distribution parameters must be positive");
  }
  if (sampling.n_theta < 1 || sampling.n_accel < 1) {
    throw ConfigError("sampling counts must be >= 1");
  }
  if (baseline.horizons.empty()) {
    throw ConfigError("baseline requires at least one horizon");
  }
  for (double h : baseline.horizons) {
    if (h <= 0.0) {
      throw ConfigError("baseline horizons must be positive");
    }
  }
}

Scenario load_scenario(const std::filesystem::path & file)
{
  const json j = load_json_file(file);
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kSchemaVersion) {
      throw InputError(
        "unsupported schema_version " + std::to_string(version) + " in " + file.string());
    }

    Scenario scenario;
    scenario.id = j.value("scenario_id", file.stem().string());

    std::vector<Vec2> vertices;
    for (const auto & vertex : j.at("path")) {
      if (vertex.size() != 2) {
        throw InputError("path vertices must be [x, y] pairs");
      }
      vertices.push_back(Vec2{vertex[0].get<double>(), vertex[1].get<double>()});
    }
    scenario.nominal_path = NominalPath(std::move(vertices));

    const json & ego = j.at("ego");
    const json & pose = ego.at("pose");
    scenario.ego.pose.center = Vec2{pose.at("x").get<double>(), pose.at("y").get<double>()};
    scenario.ego.pose.heading = pose.at("heading").get<double>();
    scenario.ego.pose.length = ego.at("length").get<double>();
    scenario.ego.pose.width = ego.at("width").get<double>();
    scenario.ego.v = ego.at("v").get<double>();

    scenario.eval_times = j.at("eval_times").get<std::vector<double>>();

    for (const auto & actor : j.at("actors")) {
      ActorTrack track;
      track.id = actor.at("id").get<std::string>();
      track.cls = actor_class_from_string(actor.at("class").get<std::string>());
      track.is_aoi = actor.at("is_aoi").get<bool>();
      track.is_unsafe = actor.value("is_unsafe", false);
      track.states = states_from_json(actor.at("states"));
      track.validate();
      scenario.ground_truth.push_back(std::move(track));
    }

    if (j.contains("predictions")) {
      const json & preds = j.at("predictions");
      if (preds.contains("grid")) {
        const json & grid = preds.at("grid");
        DirectGrid dg;
        const auto dims = grid.at("dims").get<std::vector<int>>();
        if (dims.size() != 3) {
          throw InputError("prediction grid dims must be [T, A, C]");
        }
        dg.t_dim = dims[0];
        dg.along_dim = dims[1];
        dg.cross_dim = dims[2];
        dg.values = grid.at("values").get<std::vector<double>>();
        scenario.predictions.grid = std::move(dg);
      } else {
        for (const auto & [actor_id, modes] : preds.items()) {
          std::vector<PredictionMode> parsed;
          for (const auto & mode : modes) {
            PredictionMode pm;
            pm.weight = mode.at("weight").get<double>();
            pm.track.id = actor_id;
            pm.track.states = states_from_json(mode.at("states"));
            parsed.push_back(std::move(pm));
          }
          scenario.predictions.modes.emplace(actor_id, std::move(parsed));
        }
      }
      scenario.predictions.validate();
    }
    return scenario;
  } catch (const json::exception & e) {
    throw InputError("malformed scenario " + file.string() + ": " + e.what());
  }
}

void save_scenario(const Scenario & scenario, const std::filesystem::path & file)
{
  json j;
  j["schema_version"] = kSchemaVersion;
  j["scenario_id"] = scenario.id;

  json path = json::array();
  for (const Vec2 & v : scenario.nominal_path.vertices()) {
    path.push_back(json::array({v.x(), v.y()}));
  }
  j["path"] = std::move(path);

  j["ego"] = json{
    {"pose",
     json{
       {"x", scenario.ego.pose.center.x()},
       {"y", scenario.ego.pose.center.y()},
       {"heading", scenario.ego.pose.heading}}},
    {"v", scenario.ego.v},
    {"length", scenario.ego.pose.length},
    {"width", scenario.ego.pose.width}};

  j["eval_times"] = scenario.eval_times;

  json actors = json::array();
  for (const ActorTrack & track : scenario.ground_truth) {
    json states = json::array();
    for (const ActorState & s : track.states) {
      states.push_back(state_to_json(s));
    }
    json actor{
      {"id", track.id},
      {"class", to_string(track.cls)},
      {"is_aoi", track.is_aoi},
      {"states", std::move(states)}};
    if (track.is_unsafe) {
      actor["is_unsafe"] = true;
    }
    actors.push_back(std::move(actor));
  }
  j["actors"] = std::move(actors);

  if (scenario.predictions.grid) {
    const DirectGrid & dg = *scenario.predictions.grid;
    j["predictions"] = json{
      {"grid",
       json{
         {"dims", json::array({dg.t_dim, dg.along_dim, dg.cross_dim})},
         {"values", dg.values}}}};
  } else {
    json preds = json::object();
    for (const auto & [actor_id, modes] : scenario.predictions.modes) {
      json mode_list = json::array();
      for (const PredictionMode & mode : modes) {
        json states = json::array();
        for (const ActorState & s : mode.track.states) {
          states.push_back(state_to_json(s));
        }
        mode_list.push_back(json{{"weight", mode.weight}, {"states", std::move(states)}});
      }
      preds[actor_id] = std::move(mode_list);
    }
    j["predictions"] = std::move(preds);
  }

  std::ofstream out(file);
  if (!out) {
    throw InputError("cannot write " + file.string());
  }
  out << j.dump(2) << "\n";
}

EngineConfig load_config(const std::filesystem::path & file)
{
  const json j = load_json_file(file);
  EngineConfig config;
  try {
    if (j.contains("grid")) {
      const json & g = j.at("grid");
      config.grid.dx = g.value("dx", config.grid.dx);
      config.grid.dy = g.value("dy", config.grid.dy);
      config.grid.dt = g.value("dt", config.grid.dt);
      config.grid.along_extent = g.value("along_extent", config.grid.along_extent);
      config.grid.cross_extent = g.value("cross_extent", config.grid.cross_extent);
      config.grid.t_max = g.value("t_max", config.grid.t_max);
    }
    if (j.contains("theta_max_deg")) {
      config.dist.theta_max = j.at("theta_max_deg").get<double>() * kPi / 180.0;
    }
    config.dist.accel_sigma = j.value("accel_sigma", config.dist.accel_sigma);
    config.dist.accel_max = j.value("accel_max", config.dist.accel_max);
    config.sampling.n_theta = j.value("n_theta", config.sampling.n_theta);
    config.sampling.n_accel = j.value("n_accel", config.sampling.n_accel);
    config.metrics.window = j.value("window", config.metrics.window);
    if (j.contains("exposure_variant")) {
      config.metrics.variant =
        exposure_variant_from_string(j.at("exposure_variant").get<std::string>());
    }
    if (j.contains("baseline_horizons")) {
      config.baseline.horizons = j.at("baseline_horizons").get<std::vector<double>>();
    }
    config.baseline.min_over_modes = j.value("min_over_modes", config.baseline.min_over_modes);
  } catch (const json::exception & e) {
    throw ConfigError("malformed config " + file.string() + ": " + e.what());
  }
  config.validate();
  return config;
}

std::string config_to_json_string(const EngineConfig & config)
{
  json j{
    {"grid",
     json{
       {"dx", config.grid.dx},
       {"dy", config.grid.dy},
       {"dt", config.grid.dt},
       {"along_extent", config.grid.along_extent},
       {"cross_extent", config.grid.cross_extent},
       {"t_max", config.grid.t_max}}},
    {"theta_max_deg", config.dist.theta_max * 180.0 / kPi},
    {"accel_sigma", config.dist.accel_sigma},
    {"accel_max", config.dist.accel_max},
    {"n_theta", config.sampling.n_theta},
    {"n_accel", config.sampling.n_accel},
    {"window", config.metrics.window},
    {"exposure_variant", to_string(config.metrics.variant)},
    {"baseline_horizons", config.baseline.horizons},
    {"min_over_modes", config.baseline.min_over_modes}};
  return j.dump(2);
}

}  // namespace egograde
