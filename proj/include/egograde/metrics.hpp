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

#ifndef EGOGRADE_METRICS_HPP_
#define EGOGRADE_METRICS_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>

#include "egograde/beelines.hpp"
#include "egograde/grid.hpp"
#include "egograde/occupancy.hpp"

namespace egograde
{

/// Denominator choice for the risk ratio: plain exposure, or exposure
/// further thinned by the predicted-unoccupied probability.
enum class ExposureVariant { kE, kEPrime };

std::string to_string(ExposureVariant variant);
ExposureVariant exposure_variant_from_string(const std::string & name);

struct MetricConfig
{
  /// Steps in the protection/exposure window: the products for horizon H run
  /// from t1 = max(1, H - window + 1).
  int window = 3;
  ExposureVariant variant = ExposureVariant::kEPrime;

  void validate() const;
};

/// Intermediate quantities for one footprint at horizon H of a beeline.
struct FootprintTerms
{
  double occ_pred = 0.0;
  double occ_gt = 0.0;
  double unprotected = 1.0;
  double exposed = 1.0;
  double d = 0.0;
  double e = 0.0;
  double e_prime = 0.0;
  double h = 0.0;
  double g = 0.0;
};

/// Ratio metrics for one evaluation frame. Values are absent when the
/// corresponding denominator is zero (no exposed reachable space).
struct MetricResult
{
  std::optional<double> p_lambda;
  std::optional<double> p_zeta;
  std::map<std::string, std::optional<double>> per_actor;

  double lambda_numerator = 0.0;
  double lambda_denominator = 0.0;
  double zeta_numerator = 0.0;
  double zeta_denominator = 0.0;
};

/// Product of factors in [0, 1]; switches to log space when a factor drops
/// below 1e-12 so long chains of small terms do not flush to zero early.
double stable_product(std::span<const double> factors);

/// Probability that at least one footprint cell is occupied:
/// 1 - prod over cells of (1 - fraction * P). Empty footprint -> 0.
double footprint_occupancy(const OccupancyField & field, const Footprint & footprint);

/// Probability that no window step up to and including H is predicted
/// occupied: prod_{t=t1}^{H} (1 - occ_pred(F_t)).
double unprotected(
  const OccupancyField & pred_field, const Beeline & beeline, int horizon,
  const MetricConfig & cfg);

/// Probability that the approach to H was not already blocked by ground
/// truth: prod_{t=t1}^{H-1} (1 - occ_gt(F_t)). The product excludes H itself
/// so a footprint does not block its own horizon.
double exposure(
  const OccupancyField & gt_field, const Beeline & beeline, int horizon, const MetricConfig & cfg);

FootprintTerms footprint_terms(
  const OccupancyField & pred_field, const OccupancyField & gt_field, const Beeline & beeline,
  int horizon, const MetricConfig & cfg);

/// Reach-weighted fraction of exposed candidate states that are occupied but
/// unprotected. Undefined when the denominator is zero.
std::optional<double> p_lambda(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const MetricConfig & cfg);

/// Reach-weighted fraction of unoccupied exposed states blocked by
/// predictions. Undefined when the denominator is zero.
std::optional<double> p_zeta(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const MetricConfig & cfg);

/// p_lambda with the numerator restricted to footprints whose occupancy in
/// `actor_field` is positive; the denominator is the full p_lambda
/// denominator.
std::optional<double> p_lambda_actor(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const OccupancyField & actor_field, const MetricConfig & cfg);

/// One pass over the ensemble computing p_lambda, p_zeta, and
/// p_lambda_actor for every actor in `gt`.
MetricResult evaluate_metrics(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field, const GtFields & gt,
  const MetricConfig & cfg);

/// Partial derivatives of p_lambda with respect to each predicted-occupancy
/// value, one array per time slice. Zero everywhere when p_lambda is
/// undefined.
FieldData grad_p_lambda(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const MetricConfig & cfg);

}  // namespace egograde

#endif  // EGOGRADE_METRICS_HPP_
