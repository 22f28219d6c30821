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

#ifndef EGOGRADE_OCCUPANCY_HPP_
#define EGOGRADE_OCCUPANCY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egograde/geometry.hpp"
#include "egograde/grid.hpp"
#include "egograde/path_frame.hpp"

namespace egograde
{

enum class ActorClass { kVehicle, kPedestrian, kCyclist, kOther };

std::string to_string(ActorClass cls);
ActorClass actor_class_from_string(const std::string & name);

struct ActorState
{
  double t = 0.0;
  OrientedBox box;
};

/// Timestamped oriented boxes for one actor. Poses between samples are
/// linearly interpolated; headings take the shortest angular path.
struct ActorTrack
{
  std::string id;
  ActorClass cls = ActorClass::kOther;
  bool is_aoi = false;
  bool is_unsafe = false;
  std::vector<ActorState> states;

  void validate() const;  // throws InputError
  double start_time() const { return states.front().t; }
  double end_time() const { return states.back().t; }
  bool covers(double t) const;
  OrientedBox interpolate(double t) const;        // requires covers(t)
  OrientedBox interpolate_clamped(double t) const;  // clamps to the endpoints
};

struct PredictionMode
{
  double weight = 1.0;
  ActorTrack track;
};

/// Direct spatiotemporal occupancy output, row-major [t][along][cross] with
/// t_dim = n_steps + 1 slices.
struct DirectGrid
{
  int t_dim = 0;
  int along_dim = 0;
  int cross_dim = 0;
  std::vector<double> values;
};

/// Either per-actor multimodal tracks or a direct occupancy grid.
struct PredictionSet
{
  std::map<std::string, std::vector<PredictionMode>> modes;
  std::optional<DirectGrid> grid;

  void validate() const;  // weights in [0,1], per-actor sum <= 1 + 1e-9
  bool has_prediction_for(const std::string & actor_id) const;
};

struct EgoState
{
  OrientedBox pose;  // length/width are the ego body dimensions
  double v = 0.0;    // m/s along the path
};

struct Scenario
{
  std::string id;
  NominalPath nominal_path{{Vec2{0.0, 0.0}, Vec2{1.0, 0.0}}};
  EgoState ego;
  std::vector<double> eval_times;
  std::vector<ActorTrack> ground_truth;
  PredictionSet predictions;

  const ActorTrack * find_actor(const std::string & actor_id) const;
};

/// Exact coverage fractions of an oriented box over the mesh cells:
/// fraction = area(box intersect cell) / area(cell). Cells with no overlap
/// are omitted; a box outside the grid yields an empty result.
std::vector<CellCover> rasterize_box(const OrientedBox & box, const CurvilinearMesh & mesh);

struct GtFields
{
  OccupancyField combined;
  std::map<std::string, OccupancyField> per_actor;
  /// Actors whose tracks did not cover every needed horizon (still rasterized
  /// at the steps they do cover).
  std::vector<std::string> partial_actors;
};

/// Ground-truth occupancy at eval_time + k*dt for k in 0..n_steps. The
/// combined field is the complementary product over the per-actor fields.
GtFields build_gt_field(
  const Scenario & scenario, double eval_time, const CurvilinearMesh & mesh,
  const GridSpec & spec);

/// Predicted occupancy; per cell 1 - prod over (actor, mode) of
/// (1 - weight * coverage). A direct grid is passed through after a shape
/// check (throws ShapeError on mismatch).
OccupancyField build_pred_field(
  const PredictionSet & predictions, double eval_time, const CurvilinearMesh & mesh,
  const GridSpec & spec);

/// Threshold a field at 0.5 into {0, 1} (binary-occupancy ablation mode).
void binarize_field(OccupancyField & field, double threshold = 0.5);

}  // namespace egograde

#endif  // EGOGRADE_OCCUPANCY_HPP_
