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

// Release gate for the evaluation engine. Each criterion prints exactly one
// PASS/FAIL line; the process exits nonzero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "egograde/beelines.hpp"
#include "egograde/evaluate.hpp"
#include "egograde/metrics.hpp"
#include "egograde/path_frame.hpp"
#include "egograde/ranking.hpp"
#include "egograde/synthetic.hpp"
#include "random_instance.hpp"
#include "reference_impl.hpp"

using namespace egograde;

namespace
{

struct Outcome
{
  bool pass = false;
  std::string detail;
};

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::string fmt(const char * format, ...)
{
  char buffer[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

/// Composite Simpson rule over [lo, hi] with n (even) intervals.
double simpson(double lo, double hi, int n, const std::function<double(double)> & f)
{
  const double h = (hi - lo) / n;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) {
    sum += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

// ---------------------------------------------------------------------------
// Criterion 1: hand-checked corridor scene.
//
// A 3 m straight corridor, one cell wide, one candidate trajectory whose
// footprint at step t covers exactly cell (t-1, 0). An obstacle A sits on the
// step-2 cell at slice 2 and an obstacle G on the step-3 cell at slice 3.
// With A predicted: P(lambda) = 0, P(zeta) = 1/2, F3 fully protected.
// With A in ground truth instead: P(lambda) = 1/2. All values are exact
// in floating point, so the comparison is at 1e-12.
// ---------------------------------------------------------------------------

GridSpec corridor_spec()
{
  GridSpec spec;
  spec.dx = 1.0;
  spec.dy = 1.0;
  spec.dt = 1.0;
  spec.along_extent = 3.0;
  spec.cross_extent = 1.0;
  spec.t_max = 3.0;
  return spec;
}

TrajectoryEnsemble corridor_ensemble(const GridSpec & spec)
{
  TrajectoryEnsemble ens;
  ens.spec = spec;
  ens.v_i = 1.0;
  ens.ego_length = 1.0;
  ens.ego_width = 1.0;
  Beeline b;
  for (int step = 1; step <= 3; ++step) {
    Footprint fp;
    fp.step = step;
    fp.center_pr = Vec2{step - 0.5, 0.0};
    fp.reach_weight = 1.0 / 3.0;
    fp.cells.push_back(CellCover{step - 1, 0, 1.0});
    b.footprints.push_back(std::move(fp));
  }
  ens.beelines.push_back(std::move(b));
  return ens;
}

Outcome criterion_corridor()
{
  const GridSpec spec = corridor_spec();
  const TrajectoryEnsemble ens = corridor_ensemble(spec);
  MetricConfig cfg;
  cfg.window = 3;

  double max_err = 0.0;
  const auto record = [&max_err](const std::optional<double> & got, double want) {
    max_err = std::max(
      max_err, got.has_value() ? std::abs(*got - want)
                               : std::numeric_limits<double>::infinity());
  };

  // Obstacle A as a prediction on the step-2 footprint, G in ground truth on
  // the step-3 footprint.
  OccupancyField pred(spec);
  pred.at(2, 1, 0) = 1.0;
  OccupancyField gt(spec);
  gt.at(3, 2, 0) = 1.0;

  cfg.variant = ExposureVariant::kE;
  record(p_lambda(ens, pred, gt, cfg), 0.0);
  cfg.variant = ExposureVariant::kEPrime;
  record(p_lambda(ens, pred, gt, cfg), 0.0);
  record(p_zeta(ens, pred, gt, cfg), 0.5);
  max_err = std::max(max_err, std::abs(unprotected(pred, ens.beelines[0], 3, cfg)));

  GtFields fields;
  fields.combined = gt;
  fields.per_actor["G"] = gt;
  const MetricResult with_actor = evaluate_metrics(ens, pred, fields, cfg);
  record(with_actor.per_actor.at("G"), 0.0);

  // Same scene with A moved into ground truth and nothing predicted.
  OccupancyField no_pred(spec);
  OccupancyField gt_both = gt;
  gt_both.at(2, 1, 0) = 1.0;
  cfg.variant = ExposureVariant::kE;
  record(p_lambda(ens, no_pred, gt_both, cfg), 0.5);
  cfg.variant = ExposureVariant::kEPrime;
  record(p_lambda(ens, no_pred, gt_both, cfg), 0.5);
  record(p_zeta(ens, no_pred, gt_both, cfg), 0.0);

  return {max_err <= 1e-12, fmt("max abs error %.3g", max_err)};
}

// ---------------------------------------------------------------------------
// Criterion 2: engine vs naive reference loops on randomized instances.
// ---------------------------------------------------------------------------

OccupancyField sparse_field(std::mt19937_64 & rng, const GridSpec & spec)
{
  OccupancyField field(spec);
  for (int k = 0; k <= spec.n_steps(); ++k) {
    for (int ia = 0; ia < spec.n_along(); ++ia) {
      for (int ic = 0; ic < spec.n_cross(); ++ic) {
        if (testutil::uniform(rng, 0.0, 1.0) < 0.3) {
          field.at(k, ia, ic) = testutil::uniform(rng, 0.0, 1.0);
        }
      }
    }
  }
  return field;
}

Outcome criterion_reference_equivalence()
{
  std::mt19937_64 rng(0xACCE2);
  const int n_instances = 120;
  double max_diff = 0.0;
  int comparisons = 0;

  const auto diff_opt = [&](const std::optional<double> & a, const std::optional<double> & b) {
    if (a.has_value() != b.has_value()) {
      max_diff = std::numeric_limits<double>::infinity();
      return;
    }
    if (a.has_value()) {
      max_diff = std::max(max_diff, std::abs(*a - *b));
    }
    ++comparisons;
  };

  for (int i = 0; i < n_instances; ++i) {
    testutil::InstanceOptions opt;
    if (i % 3 == 1) {
      opt.saturate_prob = 0.5;
    } else if (i % 3 == 2) {
      opt.interior_fields = true;
    }
    const testutil::RandomInstance inst = testutil::make_random_instance(rng, opt);

    GtFields fields;
    fields.combined = inst.gt;
    fields.per_actor["a1"] = sparse_field(rng, inst.spec);
    fields.per_actor["a2"] = sparse_field(rng, inst.spec);

    MetricConfig cfg;
    cfg.window = 1 + i % 4;
    for (const ExposureVariant variant : {ExposureVariant::kE, ExposureVariant::kEPrime}) {
      cfg.variant = variant;
      const MetricResult engine = evaluate_metrics(inst.ensemble, inst.pred, fields, cfg);
      const refimpl::Result ref = refimpl::evaluate(
        inst.ensemble, inst.pred, inst.gt, fields.per_actor, cfg.window,
        variant == ExposureVariant::kEPrime);
      diff_opt(engine.p_lambda, ref.p_lambda);
      diff_opt(engine.p_zeta, ref.p_zeta);
      diff_opt(engine.per_actor.at("a1"), ref.per_actor.at("a1"));
      diff_opt(engine.per_actor.at("a2"), ref.per_actor.at("a2"));
    }
  }

  return {
    max_diff <= 1e-9,
    fmt("%d instances, %d comparisons, max abs diff %.3g", n_instances, comparisons, max_diff)};
}

// ---------------------------------------------------------------------------
// Criterion 3: the reach density integrates to one over its support.
//
// The density is sampled as a black box on a polar lattice (the r factor is
// the Jacobian of x = r cos, y = r sin) and integrated with Simpson rules in
// r, theta (split at the triangular kink), and t.
// ---------------------------------------------------------------------------

Outcome criterion_density_mass()
{
  std::mt19937_64 rng(0xDE5517);
  const double t_max = 3.0;
  double worst = 0.0;
  std::ostringstream masses;

  for (int c = 0; c < 3; ++c) {
    DistributionConfig dist;
    dist.theta_max = testutil::uniform(rng, 5.0, 30.0) * kPi / 180.0;
    dist.accel_sigma = testutil::uniform(rng, 0.5, 3.0);
    dist.accel_max = 3.0;
    const double v_i = testutil::uniform(rng, 5.0, 15.0);

    const auto slice_mass = [&](double t) {
      // The implied acceleration spans [-accel_max, accel_max]; shave an
      // epsilon so the truncation boundary itself is never sampled.
      const double a_span = dist.accel_max - 1e-9;
      const double r_lo = v_i * t - a_span * t * t / 2.0;
      const double r_hi = v_i * t + a_span * t * t / 2.0;
      const auto ray_mass = [&](double theta) {
        return simpson(r_lo, r_hi, 240, [&](double r) {
          return reach_density(r * std::cos(theta), r * std::sin(theta), t, v_i, t_max, dist) * r;
        });
      };
      return simpson(-dist.theta_max, 0.0, 16, ray_mass) +
             simpson(0.0, dist.theta_max, 16, ray_mass);
    };

    // Mass below t_lo is t_lo / t_max under the uniform arrival time.
    const double t_lo = 1e-3;
    const double mass = simpson(t_lo, t_max, 60, slice_mass);
    worst = std::max(worst, std::abs(mass - 1.0));
    masses << (c > 0 ? ", " : "") << fmt("%.6f", mass);
  }

  return {worst <= 0.01, "integrals " + masses.str()};
}

// ---------------------------------------------------------------------------
// Criterion 4: analytic risk gradient vs central finite differences.
// ---------------------------------------------------------------------------

Outcome criterion_gradient()
{
  std::mt19937_64 rng(0x69AD);
  const double step = 1e-6;
  double worst_rel = 0.0;
  int checked = 0;

  for (int i = 0; i < 20; ++i) {
    testutil::InstanceOptions opt;
    opt.interior_fields = true;
    opt.allow_empty_footprints = false;
    MetricConfig cfg;
    cfg.window = 1 + i % 3;
    cfg.variant = i % 2 == 0 ? ExposureVariant::kE : ExposureVariant::kEPrime;

    // Reject draws whose denominator is too small for stable quotients.
    testutil::RandomInstance inst = testutil::make_random_instance(rng, opt);
    for (int tries = 0; tries < 20; ++tries) {
      GtFields fields;
      fields.combined = inst.gt;
      if (evaluate_metrics(inst.ensemble, inst.pred, fields, cfg).lambda_denominator > 1e-6) {
        break;
      }
      inst = testutil::make_random_instance(rng, opt);
    }

    const FieldData grad = grad_p_lambda(inst.ensemble, inst.pred, inst.gt, cfg);
    for (int k = 0; k <= inst.spec.n_steps(); ++k) {
      for (int ia = 0; ia < inst.spec.n_along(); ++ia) {
        for (int ic = 0; ic < inst.spec.n_cross(); ++ic) {
          OccupancyField bumped = inst.pred;
          bumped.at(k, ia, ic) += step;
          const double hi = *p_lambda(inst.ensemble, bumped, inst.gt, cfg);
          bumped.at(k, ia, ic) -= 2.0 * step;
          const double lo = *p_lambda(inst.ensemble, bumped, inst.gt, cfg);
          const double fd = (hi - lo) / (2.0 * step);
          const double ga = grad[k](ia, ic);
          const double rel = std::abs(ga - fd) / std::max({std::abs(ga), std::abs(fd), 1e-4});
          worst_rel = std::max(worst_rel, rel);
          ++checked;
        }
      }
    }
  }

  return {worst_rel <= 1e-5, fmt("%d partials, worst relative error %.3g", checked, worst_rel)};
}

// ---------------------------------------------------------------------------
// Criterion 5: randomized property suites, >= 200 cases each.
// ---------------------------------------------------------------------------

int scale_invariance_failures(std::mt19937_64 & rng, int cases)
{
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    GridSpec spec;
    spec.dx = 0.5;
    spec.dy = 0.5;
    spec.dt = 0.5;
    spec.along_extent = 12.0;
    spec.cross_extent = 6.0;
    spec.t_max = 2.0;

    DistributionConfig dist;
    dist.theta_max = testutil::uniform(rng, 5.0, 25.0) * kPi / 180.0;
    dist.accel_sigma = testutil::uniform(rng, 0.5, 3.0);
    dist.accel_max = testutil::uniform(rng, 2.0, 4.0);
    SamplingConfig sampling;
    sampling.n_theta = 5;
    sampling.n_accel = 5;
    const double v_i = testutil::uniform(rng, 3.0, 12.0);
    const double ego_l = testutil::uniform(rng, 3.5, 5.0);
    const double ego_w = testutil::uniform(rng, 1.6, 2.2);
    const double offset = testutil::uniform(rng, -1.0, 1.0);

    // Scaling every length by a power of two must reproduce the same cell
    // fractions and reach weights bit for bit: each floating-point operation
    // commutes with an exact exponent shift.
    const double s = std::ldexp(1.0, testutil::uniform_int(rng, -8, 8));
    GridSpec scaled_spec = spec;
    scaled_spec.dx *= s;
    scaled_spec.dy *= s;
    scaled_spec.along_extent *= s;
    scaled_spec.cross_extent *= s;
    DistributionConfig scaled_dist = dist;
    scaled_dist.accel_sigma *= s;
    scaled_dist.accel_max *= s;

    const TrajectoryEnsemble base =
      generate_beelines(dist, sampling, v_i, ego_l, ego_w, offset, spec);
    const TrajectoryEnsemble scaled = generate_beelines(
      scaled_dist, sampling, s * v_i, s * ego_l, s * ego_w, s * offset, scaled_spec);

    bool ok = base.beelines.size() == scaled.beelines.size();
    for (std::size_t b = 0; ok && b < base.beelines.size(); ++b) {
      const Beeline & x = base.beelines[b];
      const Beeline & y = scaled.beelines[b];
      ok = bits(x.theta) == bits(y.theta) && bits(s * x.accel) == bits(y.accel) &&
           x.footprints.size() == y.footprints.size();
      for (std::size_t f = 0; ok && f < x.footprints.size(); ++f) {
        const Footprint & p = x.footprints[f];
        const Footprint & q = y.footprints[f];
        ok = p.step == q.step && bits(p.reach_weight) == bits(q.reach_weight) &&
             bits(s * p.center_pr.x()) == bits(q.center_pr.x()) &&
             bits(s * p.center_pr.y()) == bits(q.center_pr.y()) &&
             p.cells.size() == q.cells.size();
        for (std::size_t c = 0; ok && c < p.cells.size(); ++c) {
          ok = p.cells[c].along == q.cells[c].along && p.cells[c].cross == q.cells[c].cross &&
               bits(p.cells[c].fraction) == bits(q.cells[c].fraction);
        }
      }
    }
    failures += ok ? 0 : 1;
  }
  return failures;
}

/// Raise a random subset of predicted-occupancy values toward one.
OccupancyField bump_field(std::mt19937_64 & rng, const OccupancyField & field)
{
  OccupancyField out = field;
  for (int k = 0; k <= field.spec().n_steps(); ++k) {
    for (int ia = 0; ia < field.spec().n_along(); ++ia) {
      for (int ic = 0; ic < field.spec().n_cross(); ++ic) {
        if (testutil::uniform(rng, 0.0, 1.0) < 0.5) {
          const double v = out.at(k, ia, ic);
          out.at(k, ia, ic) = v + testutil::uniform(rng, 0.0, 1.0) * (1.0 - v);
        }
      }
    }
  }
  return out;
}

Outcome criterion_properties()
{
  std::ostringstream detail;
  bool all_pass = true;

  // Suite A: reach weights are invariant under power-of-two length scaling.
  {
    std::mt19937_64 rng(0x5CA1E);
    const int failures = scale_invariance_failures(rng, 200);
    all_pass = all_pass && failures == 0;
    detail << fmt("scale %d/200", 200 - failures);
  }

  // Suite B: raising predicted occupancy never raises the risk ratio
  // (plain-exposure variant), and never lowers the blocked-space ratio.
  {
    std::mt19937_64 rng(0x3010);
    int safety_fail = 0;
    int comfort_fail = 0;
    for (int i = 0; i < 200; ++i) {
      const testutil::RandomInstance inst = testutil::make_random_instance(rng);
      const OccupancyField raised = bump_field(rng, inst.pred);
      MetricConfig cfg;
      cfg.window = 1 + i % 4;
      cfg.variant = ExposureVariant::kE;
      const auto before = p_lambda(inst.ensemble, inst.pred, inst.gt, cfg);
      const auto after = p_lambda(inst.ensemble, raised, inst.gt, cfg);
      if (before.has_value() != after.has_value() ||
          (before.has_value() && *after > *before + 1e-12)) {
        ++safety_fail;
      }
      const auto zeta_before = p_zeta(inst.ensemble, inst.pred, inst.gt, cfg);
      const auto zeta_after = p_zeta(inst.ensemble, raised, inst.gt, cfg);
      if (zeta_before.has_value() != zeta_after.has_value() ||
          (zeta_before.has_value() && *zeta_after < *zeta_before - 1e-12)) {
        ++comfort_fail;
      }
    }
    all_pass = all_pass && safety_fail == 0 && comfort_fail == 0;
    detail << fmt(", safety-mono %d/200, comfort-mono %d/200", 200 - safety_fail,
                  200 - comfort_fail);
  }

  // Suite C: every defined output stays a probability.
  {
    std::mt19937_64 rng(0xB0DD);
    int bound_fail = 0;
    for (int i = 0; i < 200; ++i) {
      testutil::InstanceOptions opt;
      opt.saturate_prob = 0.3;
      const testutil::RandomInstance inst = testutil::make_random_instance(rng, opt);
      GtFields fields;
      fields.combined = inst.gt;
      fields.per_actor["a1"] = sparse_field(rng, inst.spec);
      MetricConfig cfg;
      cfg.variant = i % 2 == 0 ? ExposureVariant::kE : ExposureVariant::kEPrime;
      const MetricResult r = evaluate_metrics(inst.ensemble, inst.pred, fields, cfg);
      const auto in_unit = [](const std::optional<double> & v) {
        return !v.has_value() || (*v >= 0.0 && *v <= 1.0 + 1e-12);
      };
      if (!in_unit(r.p_lambda) || !in_unit(r.p_zeta) || !in_unit(r.per_actor.at("a1"))) {
        ++bound_fail;
      }
    }
    all_pass = all_pass && bound_fail == 0;
    detail << fmt(", bounds %d/200", 200 - bound_fail);
  }

  // Suite D: path-relative round trip on a winding path. Points whose
  // projection foot lands on a polyline vertex are skipped: the frame's
  // normal is genuinely discontinuous there.
  {
    std::mt19937_64 rng(0x70BA);
    std::vector<Vec2> pts;
    for (int i = 0; i <= 60; ++i) {
      const double x = static_cast<double>(i);
      pts.push_back(Vec2{x, 4.0 * std::sin(0.12 * x)});
    }
    const NominalPath path(std::move(pts));
    const double total = path.total_length();

    int accepted = 0;
    double worst = 0.0;
    for (int attempt = 0; attempt < 4000 && accepted < 200; ++attempt) {
      const double s = testutil::uniform(rng, 1.0, total - 1.0);
      const double c = testutil::uniform(rng, -3.0, 3.0);
      const Vec2 q = from_path_relative(path, 0.0, PathRelativePoint{s, c});
      const PathRelativePoint pr = project_to_path(path, 0.0, q);
      if (pr.along < 0.5 || pr.along > total - 0.5) {
        continue;
      }
      bool near_vertex = false;
      for (const double cum : path.cumulative_arclength()) {
        near_vertex = near_vertex || std::abs(pr.along - cum) < 1e-6;
      }
      if (near_vertex) {
        continue;
      }
      const Vec2 back = from_path_relative(path, 0.0, pr);
      worst = std::max(worst, (back - q).norm());
      ++accepted;
    }
    all_pass = all_pass && accepted == 200 && worst < 1e-3;
    detail << fmt(", round-trip %d/200 worst %.3g m", accepted, worst);
  }

  return {all_pass, detail.str()};
}

// ---------------------------------------------------------------------------
// Criterion 6: ranking quality on a crippled synthetic corpus.
// ---------------------------------------------------------------------------

Outcome criterion_corpus_snr()
{
  const auto start = std::chrono::steady_clock::now();
  const EngineConfig config;
  const std::vector<Scenario> corpus = generate_synthetic_corpus(20260823, 60);

  std::vector<EvaluationRun> runs;
  runs.reserve(corpus.size());
  for (const Scenario & scenario : corpus) {
    Scenario blunted = scenario;
    blunted.predictions = cripple_predictions(scenario.predictions, 0.6, config.grid);
    runs.push_back(evaluate_scenario(blunted, config));
  }
  const RankingReport report = rank_and_snr(runs, {5, 10, 20});
  const double elapsed =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool snr_ok = true;
  std::ostringstream detail;
  detail << "snr(metric/l2)";
  for (const SnrPoint & point : report.snr_curve) {
    snr_ok = snr_ok && point.snr_metric >= point.snr_l2 - 1e-12;
    detail << fmt(" n=%d %.2f/%.2f", point.n, point.snr_metric, point.snr_l2);
  }

  double top3 = -1.0;
  for (const ScenarioHitRow & row : report.top_k_hits) {
    if (row.threshold == 3.0) {
      top3 = row.hit_metric;
    }
  }
  detail << fmt(", top-3 hit %.2f, %.1f s", top3, elapsed);

  return {snr_ok && top3 >= 0.8 && elapsed < 120.0, detail.str()};
}

// ---------------------------------------------------------------------------
// Criterion 7: the two orderings disagree on the constructed scene pair.
// ---------------------------------------------------------------------------

Outcome criterion_discordance()
{
  const EngineConfig config;
  const auto [stepper, departer] = make_discordance_pair();

  const auto evaluate_crippled = [&config](const Scenario & scenario) {
    Scenario blunted = scenario;
    blunted.predictions = cripple_predictions(scenario.predictions, 0.6, config.grid);
    return evaluate_scenario(blunted, config);
  };
  const EvaluationRun run_a = evaluate_crippled(stepper);
  const EvaluationRun run_b = evaluate_crippled(departer);

  const auto aoi_summary = [](const EvaluationRun & run) -> const ActorSummary * {
    for (const ActorSummary & actor : run.actors) {
      if (actor.is_aoi) {
        return &actor;
      }
    }
    return nullptr;
  };
  const ActorSummary * a = aoi_summary(run_a);
  const ActorSummary * b = aoi_summary(run_b);
  if (a == nullptr || b == nullptr || !a->worst_p_lambda.has_value() ||
      !b->worst_p_lambda.has_value() || a->worst_l2_at.count(3.0) == 0 ||
      b->worst_l2_at.count(3.0) == 0) {
    return {false, "missing actor-of-interest scores"};
  }

  const double risk_a = *a->worst_p_lambda;
  const double risk_b = *b->worst_p_lambda;
  const double l2_a = a->worst_l2_at.at(3.0);
  const double l2_b = b->worst_l2_at.at(3.0);
  return {
    risk_a > risk_b && l2_a < l2_b,
    fmt("risk %.3f vs %.3f, l2@3s %.2f m vs %.2f m", risk_a, risk_b, l2_a, l2_b)};
}

}  // namespace

int main()
{
  struct Entry
  {
    const char * name;
    Outcome (*run)();
  };
  const Entry entries[] = {
    {"corridor worked examples", criterion_corridor},
    {"reference-implementation equivalence", criterion_reference_equivalence},
    {"reach-density normalization", criterion_density_mass},
    {"risk gradient vs finite differences", criterion_gradient},
    {"randomized property suites", criterion_properties},
    {"corpus ranking signal-to-noise", criterion_corpus_snr},
    {"discordant scene pair", criterion_discordance},
  };

  int failures = 0;
  int index = 0;
  for (const Entry & entry : entries) {
    ++index;
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception & e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.pass ? 0 : 1;
    std::printf(
      "[%s] %d. %s (%s)\n", outcome.pass ? "PASS" : "FAIL", index, entry.name,
      outcome.detail.c_str());
    std::fflush(stdout);
  }

  std::printf("acceptance: %d/7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
