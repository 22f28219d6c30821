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

#ifndef EGOGRADE_BEELINES_HPP_
#define EGOGRADE_BEELINES_HPP_

#include <vector>

#include "egograde/geometry.hpp"
#include "egograde/grid.hpp"

namespace egograde
{

/// Parameters of the heading / acceleration distributions that weight the
/// candidate trajectories. Angles in radians, accelerations in m/s^2.
struct DistributionConfig
{
  double theta_max = 15.0 * kPi / 180.0;
  double accel_sigma = 1.5;
  double accel_max = 3.0;
};

/// Symmetric triangular density on [-theta_max, theta_max], peak at 0.
double triangular_pdf(double theta, double theta_max);

/// Zero-mean Gaussian truncated to [-accel_max, accel_max] and renormalized.
double truncated_gaussian_pdf(double accel, double sigma, double accel_max);

/// Probability density of the ego body center being at displacement (x, y)
/// from its start at time t, under constant-heading constant-acceleration
/// motion with initial speed v_i, uniform arrival time on (0, t_max], heading
/// drawn from the triangular density and acceleration from the truncated
/// Gaussian. Zero outside t in (0, t_max] and at the origin.
double reach_density(
  double x, double y, double t, double v_i, double t_max, const DistributionConfig & dist);

/// reach_density integrated over one grid cell and one time step
/// (midpoint rule): density * dx * dy * dt.
double reach_probability(
  double x, double y, double t, double v_i, double t_max, const DistributionConfig & dist,
  const GridSpec & spec);

/// Distance traveled from initial speed v_i under constant acceleration,
/// holding position once the speed reaches zero.
double beeline_distance(double v_i, double accel, double t);

/// Ego-sized box pose at one time step of a candidate trajectory, with its
/// coverage of the path-relative lattice and the reach weight of its center.
/// `cells` may be empty when the box lies outside the grid.
struct Footprint
{
  int step = 0;
  Vec2 center_pr{0.0, 0.0};
  double heading_pr = 0.0;
  double reach_weight = 0.0;
  std::vector<CellCover> cells;
};

/// One constant-heading candidate trajectory: footprints at steps
/// 1..n_steps, positions pinned at the stopping point when the speed
/// reaches zero.
struct Beeline
{
  double theta = 0.0;
  double accel = 0.0;
  std::vector<Footprint> footprints;
};

/// Number of samples across the heading and acceleration ranges.
struct SamplingConfig
{
  int n_theta = 15;
  int n_accel = 11;
};

struct TrajectoryEnsemble
{
  std::vector<Beeline> beelines;
  double v_i = 0.0;
  double ego_length = 0.0;
  double ego_width = 0.0;
  GridSpec spec;
};

/// Builds the candidate-trajectory ensemble. Headings and accelerations are
/// sampled at cell centers of a regular lattice over their ranges, so the
/// extreme values are excluded. The ego starts at path-relative
/// (0, ego_cross_offset); a start outside the grid's cross range is a
/// configuration error.
TrajectoryEnsemble generate_beelines(
  const DistributionConfig & dist, const SamplingConfig & sampling, double v_i, double ego_length,
  double ego_width, double ego_cross_offset, const GridSpec & spec);

}  // namespace egograde

#endif  // EGOGRADE_BEELINES_HPP_
