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

#include "egograde/occupancy.hpp"

#include <algorithm>
#include <cmath>

#include "egograde/errors.hpp"

namespace egograde
{

namespace
{
constexpr double kMinFraction = 1e-12;
constexpr double kTimeTol = 1e-9;
}  // namespace

std::string to_string(ActorClass cls)
{
  switch (cls) {
    case ActorClass::kVehicle:
      return "vehicle";
    case ActorClass::kPedestrian:
      return "pedestrian";
    case ActorClass::kCyclist:
      return "cyclist";
    default:
      return "other";
  }
}

ActorClass actor_class_from_string(const std::string & name)
{
  if (name == "vehicle") {
    return ActorClass::kVehicle;
  }
  if (name == "pedestrian") {
    return ActorClass::kPedestrian;
  }
  if (name == "cyclist") {
    return ActorClass::kCyclist;
  }
  if (name == "other") {
    return ActorClass::kOther;
  }
  throw InputError("unknown actor class: " + name);
}

void ActorTrack::validate() const
{
  if (states.empty()) {
    throw InputError("actor '" + id + "' has no states");
  }
  for (std::size_t i = 1; i < states.size(); ++i) {
    if (states[i].t <= states[i - 1].t) {
      throw InputError("actor '" + id + "' has non-increasing timestamps");
    }
  }
  for (const auto & s : states) {
    if (s.box.length <= 0.0 || s.box.width <= 0.0) {
      throw InputError("actor '" + id + "' has a degenerate box");
    }
  }
}

bool ActorTrack::covers(double t) const
{
  return !states.empty() && t >= start_time() - kTimeTol && t <= end_time() + kTimeTol;
}

OrientedBox ActorTrack::interpolate(double t) const
{
  t = std::clamp(t, start_time(), end_time());
  auto it = std::lower_bound(
    states.begin(), states.end(), t,
    [](const ActorState & s, double value) { return s.t < value; });
  if (it == states.begin()) {
    return it->box;
  }
  if (it == states.end()) {
    return states.back().box;
  }
  const ActorState & hi = *it;
  const ActorState & lo = *(it - 1);
  const double u = (t - lo.t) / (hi.t - lo.t);
  OrientedBox box;
  box.center = lo.box.center + u * (hi.box.center - lo.box.center);
  box.heading = lerp_angle(lo.box.heading, hi.box.heading, u);
  box.length = lo.box.length + u * (hi.box.length - lo.box.length);
  box.width = lo.box.width + u * (hi.box.width - lo.box.width);
  return box;
}

OrientedBox ActorTrack::interpolate_clamped(double t) const
{
  return interpolate(std::clamp(t, start_time(), end_time()));
}

void PredictionSet::validate() const
{
  for (const auto & [actor_id, actor_modes] : modes) {
    double sum = 0.0;
    for (const auto & mode : actor_modes) {
      if (mode.weight < 0.0 || mode.weight > 1.0) {
        throw InputError("prediction mode weight outside [0,1] for '" + actor_id + "'");
      }
      mode.track.validate();
      sum += mode.weight;
    }
    if (sum > 1.0 + 1e-9) {
      throw InputError("prediction mode weights for '" + actor_id + "' sum to > 1");
    }
  }
  if (grid) {
    if (grid->t_dim < 1 || grid->along_dim < 1 || grid->cross_dim < 1) {
      throw InputError("direct prediction grid has empty dimensions");
    }
    const std::size_t expected = static_cast<std::size_t>(grid->t_dim) *
                                 grid->along_dim * grid->cross_dim;
    if (grid->values.size() != expected) {
      throw InputError("direct prediction grid values do not match dims");
    }
  }
}

bool PredictionSet::has_prediction_for(const std::string & actor_id) const
{
  const auto it = modes.find(actor_id);
  return it != modes.end() && !it->second.empty();
}

const ActorTrack * Scenario::find_actor(const std::string & actor_id) const
{
  for (const auto & track : ground_truth) {
    if (track.id == actor_id) {
      return &track;
    }
  }
  return nullptr;
}

std::vector<CellCover> rasterize_box(const OrientedBox & box, const CurvilinearMesh & mesh)
{
  std::vector<CellCover> covers;
  const Polygon poly = box.polygon();
  const auto box_bounds = bounding_box(poly);
  const int na = mesh.spec.n_along();
  const int nc = mesh.spec.n_cross();
  for (int ia = 0; ia < na; ++ia) {
    for (int ic = 0; ic < nc; ++ic) {
      const int idx = mesh.cell_index(ia, ic);
      if (!boxes_overlap(box_bounds, mesh.cell_bounds[idx])) {
        continue;
      }
      const auto cell = mesh.cell_polygon(ia, ic);
      const double area =
        intersection_area(Polygon(cell.begin(), cell.end()), poly);
      const double fraction = std::min(area / mesh.cell_areas[idx], 1.0);
      if (fraction > kMinFraction) {
        covers.push_back({ia, ic, fraction});
      }
    }
  }
  return covers;
}

GtFields build_gt_field(
  const Scenario & scenario, double eval_time, const CurvilinearMesh & mesh,
  const GridSpec & spec)
{
  GtFields out;
  out.combined = OccupancyField(spec);

  for (const auto & actor : scenario.ground_truth) {
    OccupancyField field(spec);
    bool any = false;
    bool partial = false;
    for (int k = 0; k <= spec.n_steps(); ++k) {
      const double t = eval_time + k * spec.dt;
      if (!actor.covers(t)) {
        partial = true;
        continue;
      }
      for (const auto & cover : rasterize_box(actor.interpolate(t), mesh)) {
        field.at(k, cover.along, cover.cross) = cover.fraction;
        any = true;
      }
    }
    field.clamp01();
    if (partial && any) {
      out.partial_actors.push_back(actor.id);
    }
    for (int k = 0; k <= spec.n_steps(); ++k) {
      out.combined.slice(k) =
        1.0 - (1.0 - out.combined.slice(k)) * (1.0 - field.slice(k));
    }
    out.per_actor.emplace(actor.id, std::move(field));
  }
  out.combined.clamp01();
  return out;
}

OccupancyField build_pred_field(
  const PredictionSet & predictions, double eval_time, const CurvilinearMesh & mesh,
  const GridSpec & spec)
{
  OccupancyField field(spec);

  if (predictions.grid) {
    const DirectGrid & g = *predictions.grid;
    if (g.t_dim != spec.n_steps() + 1 || g.along_dim != spec.n_along() ||
        g.cross_dim != spec.n_cross()) {
      throw ShapeError(
        "direct prediction grid dims [" + std::to_string(g.t_dim) + "," +
        std::to_string(g.along_dim) + "," + std::to_string(g.cross_dim) +
        "] do not match the grid spec");
    }
    std::size_t i = 0;
    for (int k = 0; k <= spec.n_steps(); ++k) {
      for (int ia = 0; ia < spec.n_along(); ++ia) {
        for (int ic = 0; ic < spec.n_cross(); ++ic) {
          field.at(k, ia, ic) = g.values[i++];
        }
      }
    }
    field.clamp01();
    return field;
  }

  // 1 - P = prod over (actor, mode) of (1 - weight * coverage)
  FieldData complement = zero_field_data(spec);
  for (auto & s : complement) {
    s.setConstant(1.0);
  }
  for (const auto & [actor_id, actor_modes] : predictions.modes) {
    (void)actor_id;
    for (const auto & mode : actor_modes) {
      if (mode.weight <= 0.0) {
        continue;
      }
      for (int k = 0; k <= spec.n_steps(); ++k) {
        const double t = eval_time + k * spec.dt;
        if (!mode.track.covers(t)) {
          continue;
        }
        for (const auto & cover : rasterize_box(mode.track.interpolate(t), mesh)) {
          complement[k](cover.along, cover.cross) *=
            1.0 - mode.weight * cover.fraction;
        }
      }
    }
  }
  for (int k = 0; k <= spec.n_steps(); ++k) {
    field.slice(k) = 1.0 - complement[k];
  }
  field.clamp01();
  return field;
}

void binarize_field(OccupancyField & field, double threshold)
{
  for (int k = 0; k < field.num_slices(); ++k) {
    field.slice(k) = (field.slice(k) >= threshold).cast<double>();
  }
}

}  // namespace egograde
