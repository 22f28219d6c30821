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

#ifndef EGOGRADE_RANKING_HPP_
#define EGOGRADE_RANKING_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "egograde/evaluate.hpp"

namespace egograde
{

/// One pooled actor row. `metric` is the worst per-actor risk value over the
/// run's frames, `l2` the worst displacement at the ranking horizon.
struct RankedActor
{
  std::string scenario_id;
  std::string actor_id;
  std::optional<double> metric;
  std::optional<double> l2;
  bool is_aoi = false;
  bool is_unsafe = false;
};

/// Counts of flagged (unsafe) actors per rank decile plus the cumulative
/// signal-to-noise ratio at the decile's end, for both orderings.
struct HistogramRow
{
  int bin_start = 1;
  int count_metric = 0;
  int count_l2 = 0;
  double snr_metric = 0.0;
  double snr_l2 = 0.0;
};

struct SnrPoint
{
  int n = 0;
  double snr_metric = 0.0;
  double snr_l2 = 0.0;
};

/// Fraction of flagged actors ranking in the top K (or top percent) inside
/// their own scenario, per ordering.
struct ScenarioHitRow
{
  double threshold = 0.0;
  double hit_metric = 0.0;
  double hit_l2 = 0.0;
};

struct RankingReport
{
  double ranking_horizon = 3.0;
  std::vector<RankedActor> by_metric;
  std::vector<RankedActor> by_l2;
  std::vector<HistogramRow> histogram;
  std::vector<SnrPoint> snr_curve;
  std::vector<ScenarioHitRow> top_k_hits;
  std::vector<ScenarioHitRow> percentile_hits;
  int flagged_total = 0;
  int pooled_total = 0;
};

/// Pools in-ROI actors across runs, orders them by descending worst
/// per-actor risk and by descending worst L2 at `ranking_horizon`, and
/// derives the SNR curve, rank histogram, and per-scenario hit tables.
/// Undefined scores rank last; ties break by (scenario_id, actor_id).
/// Throws when no actor is pooled.
RankingReport rank_and_snr(
  const std::vector<EvaluationRun> & runs, const std::vector<int> & top_ns,
  double ranking_horizon = 3.0);

void save_ranking_report(const RankingReport & report, const std::filesystem::path & file);

/// Writes snr_histogram.csv (bin,count_metric,count_l2,snr_metric,snr_l2),
/// snr_curve.csv, and scenario_hits.csv into `dir`.
void write_ranking_csv(const RankingReport & report, const std::filesystem::path & dir);

}  // namespace egograde

#endif  // EGOGRADE_RANKING_HPP_
