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

#include "egograde/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "egograde/errors.hpp"

namespace egograde
{

namespace
{

constexpr double kLogSpaceThreshold = 1e-12;

void check_shapes(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field)
{
  if (!(ensemble.spec == pred_field.spec()) || !(ensemble.spec == gt_field.spec())) {
    throw ShapeError("ensemble and occupancy fields use different grid specs");
  }
  const int want = ensemble.spec.n_steps() + 1;
  if (pred_field.num_slices() != want || gt_field.num_slices() != want) {
    throw ShapeError("occupancy field slice count does not match the grid spec");
  }
}

int window_start(int horizon, const MetricConfig & cfg)
{
  return std::max(1, horizon - cfg.window + 1);
}

/// Per-beeline cache of footprint occupancies under one field.
std::vector<double> occupancy_along(const OccupancyField & field, const Beeline & beeline)
{
  std::vector<double> occ(beeline.footprints.size() + 1, 0.0);
  for (const auto & fp : beeline.footprints) {
    occ[fp.step] = footprint_occupancy(field, fp);
  }
  return occ;
}

double product_range(const std::vector<double> & occ, int first, int last)
{
  std::vector<double> factors;
  factors.reserve(std::max(0, last - first + 1));
  for (int t = first; t <= last; ++t) {
    factors.push_back(1.0 - occ[t]);
  }
  return stable_product(factors);
}

struct Accumulator
{
  double lambda_num = 0.0;
  double lambda_den = 0.0;
  double zeta_num = 0.0;
  double zeta_den = 0.0;
};

FootprintTerms terms_from_occ(
  const std::vector<double> & occ_pred, const std::vector<double> & occ_gt, int horizon,
  const MetricConfig & cfg)
{
  const int t1 = window_start(horizon, cfg);
  FootprintTerms terms;
  terms.occ_pred = occ_pred[horizon];
  terms.occ_gt = occ_gt[horizon];
  terms.unprotected = product_range(occ_pred, t1, horizon);
  terms.exposed = product_range(occ_gt, t1, horizon - 1);
  terms.d = terms.unprotected * terms.occ_gt * terms.exposed;
  terms.e = terms.exposed;
  terms.e_prime = terms.exposed * terms.unprotected;
  terms.h = (1.0 - terms.unprotected) * (1.0 - terms.occ_gt) * terms.exposed;
  terms.g = (1.0 - terms.occ_gt) * terms.exposed;
  return terms;
}

}  // namespace

std::string to_string(ExposureVariant variant)
{
  return variant == ExposureVariant::kE ? "e" : "e_prime";
}

ExposureVariant exposure_variant_from_string(const std::string & name)
{
  if (name == "e") {
    return ExposureVariant::kE;
  }
  if (name == "e_prime") {
    return ExposureVariant::kEPrime;
  }
  throw ConfigError("unknown exposure variant: " + name);
}

void MetricConfig::validate() const
{
  if (window < 1) {
    throw ConfigError("metric window must be >= 1");
  }
}

double stable_product(std::span<const double> factors)
{
  bool tiny = false;
  for (double f : factors) {
    if (f == 0.0) {
      return 0.0;
    }
    if (f < kLogSpaceThreshold) {
      tiny = true;
    }
  }
  if (!tiny) {
    double p = 1.0;
    for (double f : factors) {
      p *= f;
    }
    return p;
  }
  double log_sum = 0.0;
  for (double f : factors) {
    log_sum += std::log(f);
  }
  return std::exp(log_sum);
}

double footprint_occupancy(const OccupancyField & field, const Footprint & footprint)
{
  if (footprint.cells.empty()) {
    return 0.0;
  }
  std::vector<double> factors;
  factors.reserve(footprint.cells.size());
  for (const auto & cell : footprint.cells) {
    factors.push_back(1.0 - cell.fraction * field.at(footprint.step, cell.along, cell.cross));
  }
  return 1.0 - stable_product(factors);
}

double unprotected(
  const OccupancyField & pred_field, const Beeline & beeline, int horizon, const MetricConfig & cfg)
{
  cfg.validate();
  const auto occ = occupancy_along(pred_field, beeline);
  return product_range(occ, window_start(horizon, cfg), horizon);
}

double exposure(
  const OccupancyField & gt_field, const Beeline & beeline, int horizon, const MetricConfig & cfg)
{
  cfg.validate();
  const auto occ = occupancy_along(gt_field, beeline);
  return product_range(occ, window_start(horizon, cfg), horizon - 1);
}

FootprintTerms footprint_terms(
  const OccupancyField & pred_field, const OccupancyField & gt_field, const Beeline & beeline,
  int horizon, const MetricConfig & cfg)
{
  cfg.validate();
  const auto occ_pred = occupancy_along(pred_field, beeline);
  const auto occ_gt = occupancy_along(gt_field, beeline);
  return terms_from_occ(occ_pred, occ_gt, horizon, cfg);
}

MetricResult evaluate_metrics(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field, const GtFields & gt,
  const MetricConfig & cfg)
{
  cfg.validate();
  check_shapes(ensemble, pred_field, gt.combined);

  MetricResult result;
  Accumulator acc;
  std::map<std::string, double> actor_num;
  for (const auto & [actor_id, field] : gt.per_actor) {
    if (!(field.spec() == ensemble.spec)) {
      throw ShapeError("per-actor field for '" + actor_id + "' uses a different grid spec");
    }
    actor_num[actor_id] = 0.0;
  }

  for (const auto & beeline : ensemble.beelines) {
    const auto occ_pred = occupancy_along(pred_field, beeline);
    const auto occ_gt = occupancy_along(gt.combined, beeline);
    for (const auto & fp : beeline.footprints) {
      if (fp.cells.empty()) {
        continue;
      }
      const auto terms = terms_from_occ(occ_pred, occ_gt, fp.step, cfg);
      const double w = fp.reach_weight;
      acc.lambda_num += w * terms.d;
      acc.lambda_den += w * (cfg.variant == ExposureVariant::kE ? terms.e : terms.e_prime);
      acc.zeta_num += w * terms.h;
      acc.zeta_den += w * terms.g;
      for (auto & [actor_id, num] : actor_num) {
        const auto & field = gt.per_actor.at(actor_id);
        bool intercepts = false;
        for (const auto & cell : fp.cells) {
          if (field.at(fp.step, cell.along, cell.cross) > 0.0) {
            intercepts = true;
            break;
          }
        }
        if (intercepts) {
          num += w * terms.d;
        }
      }
    }
  }

  result.lambda_numerator = acc.lambda_num;
  result.lambda_denominator = acc.lambda_den;
  result.zeta_numerator = acc.zeta_num;
  result.zeta_denominator = acc.zeta_den;
  if (acc.lambda_den > 0.0) {
    result.p_lambda = acc.lambda_num / acc.lambda_den;
  }
  if (acc.zeta_den > 0.0) {
    result.p_zeta = acc.zeta_num / acc.zeta_den;
  }
  for (const auto & [actor_id, num] : actor_num) {
    if (acc.lambda_den > 0.0) {
      result.per_actor[actor_id] = num / acc.lambda_den;
    } else {
      result.per_actor[actor_id] = std::nullopt;
    }
  }
  return result;
}

std::optional<double> p_lambda(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const MetricConfig & cfg)
{
  GtFields gt;
  gt.combined = gt_field;
  return evaluate_metrics(ensemble, pred_field, gt, cfg).p_lambda;
}

std::optional<double> p_zeta(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const MetricConfig & cfg)
{
  GtFields gt;
  gt.combined = gt_field;
  return evaluate_metrics(ensemble, pred_field, gt, cfg).p_zeta;
}

std::optional<double> p_lambda_actor(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const OccupancyField & actor_field, const MetricConfig & cfg)
{
  GtFields gt;
  gt.combined = gt_field;
  gt.per_actor.emplace("query", actor_field);
  return evaluate_metrics(ensemble, pred_field, gt, cfg).per_actor.at("query");
}

FieldData grad_p_lambda(
  const TrajectoryEnsemble & ensemble, const OccupancyField & pred_field,
  const OccupancyField & gt_field, const MetricConfig & cfg)
{
  cfg.validate();
  check_shapes(ensemble, pred_field, gt_field);
  const bool e_prime = cfg.variant == ExposureVariant::kEPrime;

  FieldData grad_num = zero_field_data(ensemble.spec);
  FieldData grad_den = zero_field_data(ensemble.spec);
  double num = 0.0;
  double den = 0.0;

  for (const auto & beeline : ensemble.beelines) {
    const auto occ_pred = occupancy_along(pred_field, beeline);
    const auto occ_gt = occupancy_along(gt_field, beeline);
    const int n = static_cast<int>(beeline.footprints.size());
    for (const auto & fp : beeline.footprints) {
      if (fp.cells.empty()) {
        continue;
      }
      const int horizon = fp.step;
      const int t1 = window_start(horizon, cfg);
      const auto terms = terms_from_occ(occ_pred, occ_gt, horizon, cfg);
      const double w = fp.reach_weight;
      num += w * terms.d;
      den += w * (e_prime ? terms.e_prime : terms.e);

      // d = unprotected * occ_gt(H) * exposed, and for the e' variant the
      // denominator term is exposed * unprotected; both differentiate
      // through unprotected only.
      const double num_coef = w * terms.occ_gt * terms.exposed;
      const double den_coef = e_prime ? w * terms.exposed : 0.0;
      if (num_coef == 0.0 && den_coef == 0.0) {
        continue;
      }

      for (int t = t1; t <= horizon && t <= n; ++t) {
        const Footprint & wfp = beeline.footprints[t - 1];
        for (const auto & cell : wfp.cells) {
          const double f = cell.fraction;
          const double q = 1.0 - f * pred_field.at(t, cell.along, cell.cross);
          double dunprot;
          if (q > kLogSpaceThreshold) {
            dunprot = -terms.unprotected * f / q;
          } else {
            // The factor q is (near) zero; rebuild the window product
            // without it instead of dividing.
            double rest = 1.0;
            for (int s = t1; s <= horizon; ++s) {
              if (s != t) {
                rest *= 1.0 - occ_pred[s];
              }
            }
            double cell_rest = 1.0;
            for (const auto & other : wfp.cells) {
              if (&other != &cell) {
                cell_rest *= 1.0 - other.fraction * pred_field.at(t, other.along, other.cross);
              }
            }
            dunprot = -rest * cell_rest * f;
          }
          grad_num[t](cell.along, cell.cross) += num_coef * dunprot;
          if (den_coef != 0.0) {
            grad_den[t](cell.along, cell.cross) += den_coef * dunprot;
          }
        }
      }
    }
  }

  FieldData grad = zero_field_data(ensemble.spec);
  if (den <= 0.0) {
    return grad;
  }
  for (std::size_t k = 0; k < grad.size(); ++k) {
    grad[k] = (grad_num[k] * den - num * grad_den[k]) / (den * den);
  }
  return grad;
}

}  // namespace egograde
