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

#include "egograde/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace egograde
{

namespace
{

/// Errors of one mode against ground truth at the covered horizons.
DisplacementEntry score_mode(
  const ActorTrack & gt, const ActorTrack & pred, const std::vector<double> & horizons,
  double eval_time)
{
  DisplacementEntry entry;
  double sum = 0.0;
  for (double h : horizons) {
    const double t = eval_time + h;
    if (!gt.covers(t)) {
      continue;
    }
    const Vec2 delta = pred.interpolate_clamped(t).center - gt.interpolate(t).center;
    const double l2 = delta.norm();
    entry.l2_at[h] = l2;
    sum += l2;
  }
  if (!entry.l2_at.empty()) {
    entry.ade = sum / static_cast<double>(entry.l2_at.size());
    const double last = *std::max_element(horizons.begin(), horizons.end());
    const auto it = entry.l2_at.find(last);
    if (it != entry.l2_at.end()) {
      entry.fde = it->second;
    }
  }
  return entry;
}

}  // namespace

DisplacementEntry displacement_errors(
  const ActorTrack & gt, const std::vector<PredictionMode> & modes,
  const std::vector<double> & horizons, double eval_time, bool min_over_modes)
{
  if (modes.empty()) {
    DisplacementEntry entry;
    entry.missing_prediction = true;
    return entry;
  }

  if (!min_over_modes) {
    const auto best = std::max_element(
      modes.begin(), modes.end(),
      [](const PredictionMode & a, const PredictionMode & b) { return a.weight < b.weight; });
    return score_mode(gt, best->track, horizons, eval_time);
  }

  DisplacementEntry best;
  double best_ade = std::numeric_limits<double>::infinity();
  for (const auto & mode : modes) {
    DisplacementEntry entry = score_mode(gt, mode.track, horizons, eval_time);
    const double ade = entry.ade.value_or(std::numeric_limits<double>::infinity());
    if (ade < best_ade) {
      best_ade = ade;
      best = std::move(entry);
    }
  }
  if (best.l2_at.empty() && !best.ade) {
    // no mode covered any horizon; fall back to the first mode's (empty) entry
    best = score_mode(gt, modes.front().track, horizons, eval_time);
  }
  return best;
}

bool roi_filter(
  const ActorTrack & actor, const NominalPath & path, const CurvilinearMesh & mesh,
  double eval_time)
{
  const GridSpec & spec = mesh.spec;
  const double half_cross = 0.5 * spec.cross_extent;
  for (int k = 0; k <= spec.n_steps(); ++k) {
    const double t = eval_time + k * spec.dt;
    if (!actor.covers(t)) {
      continue;
    }
    for (const Vec2 & corner : actor.interpolate(t).corners()) {
      const auto pr = project_to_path(path, mesh.origin_arclength, corner);
      if (pr.along >= 0.0 && pr.along <= spec.along_extent && std::abs(pr.cross) <= half_cross) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace egograde
