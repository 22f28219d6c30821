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

#ifndef EGOGRADE_BASELINE_HPP_
#define EGOGRADE_BASELINE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egograde/occupancy.hpp"
#include "egograde/path_frame.hpp"

namespace egograde
{

struct BaselineConfig
{
  std::vector<double> horizons{1.0, 2.0, 3.0};
  /// When true, score the mode with the smallest average error instead of
  /// the highest-weight mode.
  bool min_over_modes = false;
};

/// Center-point displacement errors for one actor. `l2_at` holds only the
/// horizons the ground-truth track covers; the prediction is held at its
/// last state beyond its own end so short predictions still score.
struct DisplacementEntry
{
  std::map<double, double> l2_at;
  std::optional<double> ade;
  std::optional<double> fde;
  bool in_roi = false;
  bool missing_prediction = false;
};

using DisplacementReport = std::map<std::string, DisplacementEntry>;

DisplacementEntry displacement_errors(
  const ActorTrack & gt, const std::vector<PredictionMode> & modes,
  const std::vector<double> & horizons, double eval_time, bool min_over_modes = false);

/// True when any corner of the actor's box lands inside the grid extents at
/// any step of the evaluation window starting at eval_time.
bool roi_filter(
  const ActorTrack & actor, const NominalPath & path, const CurvilinearMesh & mesh,
  double eval_time);

}  // namespace egograde

#endif  // EGOGRADE_BASELINE_HPP_
