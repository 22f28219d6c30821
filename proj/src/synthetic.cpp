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

#include "egograde/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "egograde/errors.hpp"
#include "egograde/scenario_io.hpp"

namespace egograde
{

namespace
{

constexpr double kTrackDt = 0.3;
constexpr double kTrackEnd = 4.5;
constexpr double kEgoLength = 4.6;
constexpr double kEgoWidth = 1.9;

/// Uniform double in [lo, hi) built directly from raw engine output so the
/// corpus is byte-identical across standard libraries.
double uniform(std::mt19937_64 & rng, double lo, double hi)
{
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

bool coin(std::mt19937_64 & rng, double p_true)
{
  return uniform(rng, 0.0, 1.0) < p_true;
}

/// Samples a track at the corpus cadence from a center-position function.
/// Heading follows the motion direction; stationary spans reuse the
/// previous heading.
ActorTrack make_track(
  const std::string & id, ActorClass cls, double length, double width,
  const std::function<Vec2(double)> & position, double fallback_heading)
{
  ActorTrack track;
  track.id = id;
  track.cls = cls;
  double heading = fallback_heading;
  const int n = static_cast<int>(std::lround(kTrackEnd / kTrackDt));
  for (int i = 0; i <= n; ++i) {
    const double t = i * kTrackDt;
    const Vec2 p = position(t);
    const Vec2 ahead = position(t + 1e-4);
    const Vec2 vel = ahead - p;
    if (vel.norm() > 1e-9) {
      heading = std::atan2(vel.y(), vel.x());
    }
    ActorState state;
    state.t = t;
    state.box = OrientedBox{p, heading, length, width};
    track.states.push_back(state);
  }
  return track;
}

Scenario base_scenario(const std::string & id, double ego_v)
{
  Scenario scenario;
  scenario.id = id;
  scenario.nominal_path = NominalPath({Vec2{0.0, 0.0}, Vec2{80.0, 0.0}});
  scenario.ego.pose = OrientedBox{Vec2{0.0, 0.0}, 0.0, kEgoLength, kEgoWidth};
  scenario.ego.v = ego_v;
  scenario.eval_times = {0.0, 0.6, 1.2};
  return scenario;
}

void add_actor(Scenario & scenario, ActorTrack track, bool is_aoi, bool is_unsafe)
{
  track.is_aoi = is_aoi;
  track.is_unsafe = is_unsafe;
  PredictionMode mode;
  mode.weight = 1.0;
  mode.track = track;
  mode.track.is_aoi = false;
  mode.track.is_unsafe = false;
  scenario.predictions.modes[track.id] = {std::move(mode)};
  scenario.ground_truth.push_back(std::move(track));
}

/// Parked car in the opposite-side parking strip; near-zero displacement
/// error under any prediction cut.
void add_parked_distractor(Scenario & scenario, std::mt19937_64 & rng)
{
  const double x0 = uniform(rng, 6.0, 26.0);
  auto pos = [x0](double) { return Vec2{x0, -3.6}; };
  add_actor(
    scenario, make_track("parked_car", ActorClass::kVehicle, 4.5, 1.8, pos, 0.0), false, false);
}

/// Oncoming vehicle in the adjacent lane; harmless but accumulates a large
/// displacement error once its prediction is cut short.
void add_oncoming_distractor(Scenario & scenario, std::mt19937_64 & rng)
{
  const double x0 = uniform(rng, 30.0, 45.0);
  const double v = uniform(rng, 5.0, 7.0);
  auto pos = [x0, v](double t) { return Vec2{x0 - v * t, -3.3}; };
  add_actor(
    scenario, make_track("oncoming_car", ActorClass::kVehicle, 4.5, 1.8, pos, kPi), false, false);
}

Scenario crossing_pedestrian(const std::string & id, std::mt19937_64 & rng)
{
  Scenario scenario = base_scenario(id, uniform(rng, 4.5, 6.0));
  // Timed collision course: the pedestrian reaches the lane center exactly
  // when the ego bumper arrives. The crossing point stays a few meters ahead
  // of the last evaluation frame; closer conflicts sit inside the dense
  // near-field of candidate trajectories where even a perfect prediction
  // leaves a large partial-coverage residual in the risk ratio.
  const double v = scenario.ego.v;
  const double x_cross = (1.2 + uniform(rng, 0.95, 1.1)) * v;
  const double u = uniform(rng, 0.8, 1.2);
  const double c0 = u * (x_cross / v);
  auto pos = [x_cross, c0, u](double t) { return Vec2{x_cross, c0 - u * t}; };
  add_actor(
    scenario, make_track("ped", ActorClass::kPedestrian, 0.8, 0.8, pos, -kPi / 2.0), true, true);
  add_parked_distractor(scenario, rng);
  if (coin(rng, 0.5)) {
    add_oncoming_distractor(scenario, rng);
  }
  return scenario;
}

Scenario lead_vehicle_stop(const std::string & id, std::mt19937_64 & rng)
{
  Scenario scenario = base_scenario(id, uniform(rng, 5.5, 7.5));
  const double x0 = uniform(rng, 8.0, 14.0);
  const double v = uniform(rng, 2.0, 3.5);
  const double brake = uniform(rng, 3.0, 4.0);
  const double t_brake = uniform(rng, 0.1, 0.4);
  auto pos = [x0, v, brake, t_brake](double t) {
    if (t <= t_brake) {
      return Vec2{x0 + v * t, 0.0};
    }
    const double tb = std::min(t - t_brake, v / brake);
    return Vec2{x0 + v * t_brake + v * tb - 0.5 * brake * tb * tb, 0.0};
  };
  add_actor(scenario, make_track("lead", ActorClass::kVehicle, 4.5, 1.8, pos, 0.0), true, true);
  add_parked_distractor(scenario, rng);
  if (coin(rng, 0.5)) {
    add_oncoming_distractor(scenario, rng);
  }
  return scenario;
}

Scenario cut_in_cyclist(const std::string & id, std::mt19937_64 & rng)
{
  Scenario scenario = base_scenario(id, uniform(rng, 6.0, 8.0));
  const double x0 = uniform(rng, 6.0, 10.0);
  const double side = coin(rng, 0.5) ? 1.0 : -1.0;
  const double c0 = side * uniform(rng, 2.2, 3.0);
  const double v = uniform(rng, 1.5, 2.5);
  const double t_merge = uniform(rng, 1.2, 2.0);
  const double u_lat = -c0 / t_merge;
  auto pos = [x0, c0, v, u_lat, t_merge](double t) {
    const double y = t < t_merge ? c0 + u_lat * t : 0.0;
    return Vec2{x0 + v * t, y};
  };
  add_actor(scenario, make_track("cyclist", ActorClass::kCyclist, 1.8, 0.7, pos, 0.0), true, true);
  add_parked_distractor(scenario, rng);
  return scenario;
}

Scenario off_road_walker(const std::string & id, std::mt19937_64 & rng)
{
  Scenario scenario = base_scenario(id, uniform(rng, 5.0, 7.0));
  const double x0 = uniform(rng, 8.0, 16.0);
  const double c0 = uniform(rng, 1.8, 2.5);
  const double u = uniform(rng, 3.0, 4.0);
  auto pos = [x0, c0, u](double t) { return Vec2{x0, c0 + u * t}; };
  add_actor(
    scenario, make_track("walker", ActorClass::kPedestrian, 0.8, 0.8, pos, kPi / 2.0), true,
    false);
  add_parked_distractor(scenario, rng);
  if (coin(rng, 0.5)) {
    add_oncoming_distractor(scenario, rng);
  }
  return scenario;
}

Scenario queued_traffic(const std::string & id, std::mt19937_64 & rng)
{
  Scenario scenario = base_scenario(id, uniform(rng, 5.0, 7.0));
  const double side = coin(rng, 0.5) ? 1.0 : -1.0;
  const double x0 = uniform(rng, 8.0, 14.0);
  const double gap = uniform(rng, 7.0, 11.0);
  const double c = side * 3.4;
  auto pos0 = [x0, c](double) { return Vec2{x0, c}; };
  auto pos1 = [x0, gap, c](double) { return Vec2{x0 + gap, c}; };
  add_actor(
    scenario, make_track("queued_front", ActorClass::kVehicle, 4.5, 1.8, pos0, 0.0), true, false);
  add_actor(
    scenario, make_track("queued_back", ActorClass::kVehicle, 4.5, 1.8, pos1, 0.0), false, false);
  return scenario;
}

}  // namespace

std::vector<Scenario> generate_synthetic_corpus(std::uint64_t seed, int count)
{
  if (count < 1) {
    throw ConfigError("corpus size must be >= 1");
  }
  using Maker = Scenario (*)(const std::string &, std::mt19937_64 &);
  struct Template
  {
    const char * name;
    Maker make;
  };
  static constexpr Template kTemplates[] = {
    {"crossing_pedestrian", crossing_pedestrian},
    {"lead_vehicle_stop", lead_vehicle_stop},
    {"cut_in_cyclist", cut_in_cyclist},
    {"off_road_walker", off_road_walker},
    {"queued_traffic", queued_traffic},
  };

  std::vector<Scenario> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    const Template & tpl = kTemplates[i % 5];
    char id[64];
    std::snprintf(id, sizeof(id), "syn_%04d_%s", i, tpl.name);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(i) + 1);
    corpus.push_back(tpl.make(id, rng));
  }
  return corpus;
}

void write_corpus(const std::vector<Scenario> & corpus, const std::filesystem::path & dir)
{
  std::filesystem::create_directories(dir);
  for (const Scenario & scenario : corpus) {
    save_scenario(scenario, dir / (scenario.id + ".json"));
  }
}

std::pair<Scenario, Scenario> make_discordance_pair()
{
  Scenario stepper = base_scenario("discord_stepper", 5.0);
  {
    auto pos = [](double t) { return Vec2{8.0, 2.2 - 1.0 * t}; };
    add_actor(
      stepper, make_track("ped", ActorClass::kPedestrian, 0.8, 0.8, pos, -kPi / 2.0), true, true);
  }
  Scenario departer = base_scenario("discord_departer", 5.0);
  {
    auto pos = [](double t) { return Vec2{8.0, 2.2 + 4.0 * t}; };
    add_actor(
      departer, make_track("walker", ActorClass::kPedestrian, 0.8, 0.8, pos, kPi / 2.0), true,
      false);
  }
  return {std::move(stepper), std::move(departer)};
}

}  // namespace egograde
