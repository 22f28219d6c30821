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

#include "egograde/beelines.hpp"

#include <cmath>

#include "egograde/errors.hpp"

namespace egograde
{

namespace
{
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kTimeTol = 1e-12;
}  // namespace

double triangular_pdf(double theta, double theta_max)
{
  if (theta_max <= 0.0) {
    throw ConfigError("triangular_pdf requires theta_max > 0");
  }
  const double u = std::abs(theta) / theta_max;
  if (u >= 1.0) {
    return 0.0;
  }
  return (1.0 - u) / theta_max;
}

double truncated_gaussian_pdf(double accel, double sigma, double accel_max)
{
  if (sigma <= 0.0 || accel_max <= 0.0) {
    throw ConfigError("truncated_gaussian_pdf requires sigma > 0 and accel_max > 0");
  }
  if (std::abs(accel) > accel_max) {
    return 0.0;
  }
  const double mass = std::erf(accel_max / (sigma * kSqrt2));
  return std::exp(-0.5 * accel * accel / (sigma * sigma)) / (sigma * kSqrt2Pi * mass);
}

double reach_density(
  double x, double y, double t, double v_i, double t_max, const DistributionConfig & dist)
{
  if (t <= 0.0 || t > t_max + kTimeTol) {
    return 0.0;
  }
  const double r = std::hypot(x, y);
  if (r <= 0.0) {
    return 0.0;
  }
  const double implied_accel = 2.0 * (r - v_i * t) / (t * t);
  const double f_a = truncated_gaussian_pdf(implied_accel, dist.accel_sigma, dist.accel_max);
  const double f_theta = triangular_pdf(std::atan2(y, x), dist.theta_max);
  return 2.0 / (t_max * t * t) * f_a / r * f_theta;
}

double reach_probability(
  double x, double y, double t, double v_i, double t_max, const DistributionConfig & dist,
  const GridSpec & spec)
{
  return reach_density(x, y, t, v_i, t_max, dist) * spec.dx * spec.dy * spec.dt;
}

double beeline_distance(double v_i, double accel, double t)
{
  if (accel < 0.0) {
    const double t_stop = -v_i / accel;
    t = std::min(t, t_stop);
  }
  return v_i * t + 0.5 * accel * t * t;
}

TrajectoryEnsemble generate_beelines(
  const DistributionConfig & dist, const SamplingConfig & sampling, double v_i, double ego_length,
  double ego_width, double ego_cross_offset, const GridSpec & spec)
{
  spec.validate();
  if (sampling.n_theta < 1 || sampling.n_accel < 1) {
    throw ConfigError("sampling requires at least one heading and one acceleration");
  }
  if (v_i < 0.0) {
    throw ConfigError("initial speed must be non-negative");
  }
  if (ego_length <= 0.0 || ego_width <= 0.0) {
    throw ConfigError("ego dimensions must be positive");
  }
  if (ego_cross_offset < spec.cross_min() || ego_cross_offset > -spec.cross_min()) {
    throw ConfigError("ego start lies outside the grid's cross range");
  }

  TrajectoryEnsemble ensemble;
  ensemble.v_i = v_i;
  ensemble.ego_length = ego_length;
  ensemble.ego_width = ego_width;
  ensemble.spec = spec;
  ensemble.beelines.reserve(
    static_cast<std::size_t>(sampling.n_theta) * sampling.n_accel);

  const double theta_cell = 2.0 * dist.theta_max / sampling.n_theta;
  const double accel_cell = 2.0 * dist.accel_max / sampling.n_accel;

  for (int j = 0; j < sampling.n_theta; ++j) {
    const double theta = -dist.theta_max + (j + 0.5) * theta_cell;
    const Vec2 dir{std::cos(theta), std::sin(theta)};
    for (int m = 0; m < sampling.n_accel; ++m) {
      const double accel = -dist.accel_max + (m + 0.5) * accel_cell;
      Beeline beeline;
      beeline.theta = theta;
      beeline.accel = accel;
      beeline.footprints.reserve(spec.n_steps());
      for (int k = 1; k <= spec.n_steps(); ++k) {
        const double t = k * spec.dt;
        const double r = beeline_distance(v_i, accel, t);
        Footprint fp;
        fp.step = k;
        fp.center_pr = Vec2{r * dir.x(), ego_cross_offset + r * dir.y()};
        fp.heading_pr = theta;
        fp.reach_weight =
          reach_probability(r * dir.x(), r * dir.y(), t, v_i, spec.t_max, dist, spec);
        const OrientedBox box{fp.center_pr, theta, ego_length, ego_width};
        fp.cells = rasterize_on_lattice(box.polygon(), spec);
        beeline.footprints.push_back(std::move(fp));
      }
      ensemble.beelines.push_back(std::move(beeline));
    }
  }
  return ensemble;
}

}  // namespace egograde
