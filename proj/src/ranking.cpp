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

#include "egograde/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <json.hpp>

#include "egograde/errors.hpp"

namespace egograde
{

namespace
{

using nlohmann::json;

constexpr int kBinWidth = 10;

/// Descending by score, undefined last, ties by (scenario_id, actor_id).
bool ranked_before(
  const RankedActor & a, const RankedActor & b, std::optional<double> RankedActor::* score)
{
  const auto & sa = a.*score;
  const auto & sb = b.*score;
  if (sa.has_value() != sb.has_value()) {
    return sa.has_value();
  }
  if (sa && sb && *sa != *sb) {
    return *sa > *sb;
  }
  if (a.scenario_id != b.scenario_id) {
    return a.scenario_id < b.scenario_id;
  }
  return a.actor_id < b.actor_id;
}

std::vector<RankedActor> order_by(
  std::vector<RankedActor> pool, std::optional<double> RankedActor::* score)
{
  std::sort(pool.begin(), pool.end(), [score](const RankedActor & a, const RankedActor & b) {
    return ranked_before(a, b, score);
  });
  return pool;
}

double snr_at(const std::vector<RankedActor> & ordered, int n)
{
  const int limit = std::min<int>(n, static_cast<int>(ordered.size()));
  int flagged = 0;
  for (int i = 0; i < limit; ++i) {
    if (ordered[i].is_unsafe) {
      ++flagged;
    }
  }
  return n > 0 ? static_cast<double>(flagged) / n : 0.0;
}

/// 1-based rank of each flagged actor in an ordering.
std::vector<int> flagged_ranks(const std::vector<RankedActor> & ordered)
{
  std::vector<int> ranks;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (ordered[i].is_unsafe) {
      ranks.push_back(static_cast<int>(i) + 1);
    }
  }
  return ranks;
}

}  // namespace

RankingReport rank_and_snr(
  const std::vector<EvaluationRun> & runs, const std::vector<int> & top_ns,
  double ranking_horizon)
{
  std::vector<RankedActor> pool;
  for (const EvaluationRun & run : runs) {
    for (const ActorSummary & actor : run.actors) {
      if (!actor.in_roi) {
        continue;
      }
      RankedActor row;
      row.scenario_id = run.scenario_id;
      row.actor_id = actor.id;
      row.metric = actor.worst_p_lambda;
      const auto it = actor.worst_l2_at.find(ranking_horizon);
      if (it != actor.worst_l2_at.end()) {
        row.l2 = it->second;
      }
      row.is_aoi = actor.is_aoi;
      row.is_unsafe = actor.is_unsafe;
      pool.push_back(std::move(row));
    }
  }
  if (pool.empty()) {
    throw Error("ranking requires at least one in-ROI actor across the runs");
  }

  RankingReport report;
  report.ranking_horizon = ranking_horizon;
  report.pooled_total = static_cast<int>(pool.size());
  report.by_metric = order_by(pool, &RankedActor::metric);
  report.by_l2 = order_by(std::move(pool), &RankedActor::l2);

  const auto metric_ranks = flagged_ranks(report.by_metric);
  const auto l2_ranks = flagged_ranks(report.by_l2);
  report.flagged_total = static_cast<int>(metric_ranks.size());

  for (int n : top_ns) {
    report.snr_curve.push_back({n, snr_at(report.by_metric, n), snr_at(report.by_l2, n)});
  }

  const int max_rank = std::max(
    metric_ranks.empty() ? 0 : metric_ranks.back(), l2_ranks.empty() ? 0 : l2_ranks.back());
  for (int start = 1; start <= max_rank; start += kBinWidth) {
    HistogramRow row;
    row.bin_start = start;
    const int end = start + kBinWidth - 1;
    for (int r : metric_ranks) {
      if (r >= start && r <= end) {
        ++row.count_metric;
      }
    }
    for (int r : l2_ranks) {
      if (r >= start && r <= end) {
        ++row.count_l2;
      }
    }
    row.snr_metric = snr_at(report.by_metric, end);
    row.snr_l2 = snr_at(report.by_l2, end);
    report.histogram.push_back(row);
  }

  // Within-scenario ranks of each flagged actor, for the hit tables.
  struct ScenarioRank
  {
    int metric_rank = 0;
    int l2_rank = 0;
    int pool_size = 0;
  };
  std::vector<ScenarioRank> scenario_ranks;
  for (const EvaluationRun & run : runs) {
    std::vector<RankedActor> local;
    for (const RankedActor & row : report.by_metric) {
      if (row.scenario_id == run.scenario_id) {
        local.push_back(row);
      }
    }
    if (local.empty()) {
      continue;
    }
    const auto by_metric = order_by(local, &RankedActor::metric);
    const auto by_l2 = order_by(std::move(local), &RankedActor::l2);
    for (std::size_t i = 0; i < by_metric.size(); ++i) {
      if (!by_metric[i].is_unsafe) {
        continue;
      }
      ScenarioRank rank;
      rank.metric_rank = static_cast<int>(i) + 1;
      rank.pool_size = static_cast<int>(by_metric.size());
      for (std::size_t k = 0; k < by_l2.size(); ++k) {
        if (by_l2[k].actor_id == by_metric[i].actor_id) {
          rank.l2_rank = static_cast<int>(k) + 1;
          break;
        }
      }
      scenario_ranks.push_back(rank);
    }
  }

  const auto hit_fraction = [&scenario_ranks](auto within) {
    if (scenario_ranks.empty()) {
      return ScenarioHitRow{};
    }
    int hit_metric = 0;
    int hit_l2 = 0;
    for (const auto & rank : scenario_ranks) {
      if (within(rank.metric_rank, rank.pool_size)) {
        ++hit_metric;
      }
      if (within(rank.l2_rank, rank.pool_size)) {
        ++hit_l2;
      }
    }
    ScenarioHitRow row;
    row.hit_metric = static_cast<double>(hit_metric) / scenario_ranks.size();
    row.hit_l2 = static_cast<double>(hit_l2) / scenario_ranks.size();
    return row;
  };

  for (int k : {1, 2, 3, 5}) {
    ScenarioHitRow row = hit_fraction([k](int rank, int) { return rank <= k; });
    row.threshold = k;
    report.top_k_hits.push_back(row);
  }
  for (double pct : {10.0, 25.0, 50.0}) {
    ScenarioHitRow row = hit_fraction([pct](int rank, int size) {
      return rank <= static_cast<int>(std::ceil(pct / 100.0 * size));
    });
    row.threshold = pct;
    report.percentile_hits.push_back(row);
  }
  return report;
}

void save_ranking_report(const RankingReport & report, const std::filesystem::path & file)
{
  const auto actor_to_json = [](const RankedActor & row) {
    json j;
    j["scenario_id"] = row.scenario_id;
    j["actor_id"] = row.actor_id;
    j["metric"] = row.metric ? json(*row.metric) : json(nullptr);
    j["l2"] = row.l2 ? json(*row.l2) : json(nullptr);
    j["is_aoi"] = row.is_aoi;
    j["is_unsafe"] = row.is_unsafe;
    return j;
  };

  json j;
  j["schema_version"] = 1;
  j["ranking_horizon"] = report.ranking_horizon;
  j["pooled_total"] = report.pooled_total;
  j["flagged_total"] = report.flagged_total;
  json by_metric = json::array();
  for (const auto & row : report.by_metric) {
    by_metric.push_back(actor_to_json(row));
  }
  j["by_metric"] = std::move(by_metric);
  json by_l2 = json::array();
  for (const auto & row : report.by_l2) {
    by_l2.push_back(actor_to_json(row));
  }
  j["by_l2"] = std::move(by_l2);
  json snr = json::array();
  for (const auto & point : report.snr_curve) {
    snr.push_back(
      json{{"n", point.n}, {"snr_metric", point.snr_metric}, {"snr_l2", point.snr_l2}});
  }
  j["snr_curve"] = std::move(snr);
  json hist = json::array();
  for (const auto & row : report.histogram) {
    hist.push_back(json{
      {"bin", row.bin_start},
      {"count_metric", row.count_metric},
      {"count_l2", row.count_l2},
      {"snr_metric", row.snr_metric},
      {"snr_l2", row.snr_l2}});
  }
  j["histogram"] = std::move(hist);
  json top_k = json::array();
  for (const auto & row : report.top_k_hits) {
    top_k.push_back(json{
      {"k", static_cast<int>(row.threshold)},
      {"hit_metric", row.hit_metric},
      {"hit_l2", row.hit_l2}});
  }
  j["top_k_hits"] = std::move(top_k);
  json pct = json::array();
  for (const auto & row : report.percentile_hits) {
    pct.push_back(json{
      {"percent", row.threshold}, {"hit_metric", row.hit_metric}, {"hit_l2", row.hit_l2}});
  }
  j["percentile_hits"] = std::move(pct);

  std::ofstream out(file);
  if (!out) {
    throw InputError("cannot write " + file.string());
  }
  out << j.dump(2) << "\n";
}

void write_ranking_csv(const RankingReport & report, const std::filesystem::path & dir)
{
  std::filesystem::create_directories(dir);

  {
    std::ofstream out(dir / "snr_histogram.csv");
    if (!out) {
      throw InputError("cannot write snr_histogram.csv");
    }
    out << "bin,count_metric,count_l2,snr_metric,snr_l2\n";
    for (const auto & row : report.histogram) {
      out << row.bin_start << "," << row.count_metric << "," << row.count_l2 << ","
          << row.snr_metric << "," << row.snr_l2 << "\n";
    }
  }
  {
    std::ofstream out(dir / "snr_curve.csv");
    if (!out) {
      throw InputError("cannot write snr_curve.csv");
    }
    out << "n,snr_metric,snr_l2\n";
    for (const auto & point : report.snr_curve) {
      out << point.n << "," << point.snr_metric << "," << point.snr_l2 << "\n";
    }
  }
  {
    std::ofstream out(dir / "scenario_hits.csv");
    if (!out) {
      throw InputError("cannot write scenario_hits.csv");
    }
    out << "kind,threshold,hit_metric,hit_l2\n";
    for (const auto & row : report.top_k_hits) {
      out << "top_k," << row.threshold << "," << row.hit_metric << "," << row.hit_l2 << "\n";
    }
    for (const auto & row : report.percentile_hits) {
      out << "percentile," << row.threshold << "," << row.hit_metric << "," << row.hit_l2 << "\n";
    }
  }
}

}  // namespace egograde
