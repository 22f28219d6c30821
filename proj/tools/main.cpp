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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "egograde/errors.hpp"
#include "egograde/evaluate.hpp"
#include "egograde/ranking.hpp"
#include "egograde/scenario_io.hpp"
#include "egograde/synthetic.hpp"

namespace fs = std::filesystem;

namespace
{

std::vector<fs::path> collect_scenario_files(const fs::path & input)
{
  std::vector<fs::path> files;
  if (fs::is_directory(input)) {
    for (const auto & entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(input);
  }
  if (files.empty()) {
    throw egograde::InputError("no scenario files under " + input.string());
  }
  return files;
}

std::vector<int> parse_top_ns(const std::string & spec)
{
  std::vector<int> tops;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    tops.push_back(std::stoi(item));
  }
  if (tops.empty()) {
    throw egograde::InputError("--top expects a comma-separated list, e.g. 10,20,50");
  }
  return tops;
}

int run_evaluate(
  const std::string & scenario_arg, const std::string & config_arg, const std::string & out_arg)
{
  egograde::EngineConfig config;
  if (!config_arg.empty()) {
    config = egograde::load_config(config_arg);
  }
  std::vector<egograde::EvaluationRun> runs;
  for (const fs::path & file : collect_scenario_files(scenario_arg)) {
    const egograde::Scenario scenario = egograde::load_scenario(file);
    runs.push_back(egograde::evaluate_scenario(scenario, config));
    const auto & run = runs.back();
    std::size_t skipped = 0;
    for (const auto & frame : run.frames) {
      if (frame.skipped) {
        ++skipped;
        std::cerr << "warning: " << run.scenario_id << " frame t=" << frame.eval_time
                  << " skipped: " << frame.diagnostic << "\n";
      }
    }
    std::cout << run.scenario_id << ": " << run.frames.size() - skipped << "/"
              << run.frames.size() << " frames evaluated\n";
  }
  egograde::save_runs(runs, config, out_arg);
  std::cout << "wrote " << out_arg << "\n";
  return 0;
}

int run_cripple(
  const std::string & scenario_arg, double keep_horizon, const std::string & config_arg,
  const std::string & out_arg)
{
  egograde::EngineConfig config;
  if (!config_arg.empty()) {
    config = egograde::load_config(config_arg);
  }
  const auto files = collect_scenario_files(scenario_arg);
  const bool out_is_dir = files.size() > 1 || fs::is_directory(scenario_arg);
  if (out_is_dir) {
    fs::create_directories(out_arg);
  }
  for (const fs::path & file : files) {
    egograde::Scenario scenario = egograde::load_scenario(file);
    scenario.predictions =
      egograde::cripple_predictions(scenario.predictions, keep_horizon, config.grid);
    const fs::path out = out_is_dir ? fs::path(out_arg) / file.filename() : fs::path(out_arg);
    egograde::save_scenario(scenario, out);
  }
  std::cout << "crippled " << files.size() << " scenario(s) to " << keep_horizon << " s\n";
  return 0;
}

int run_gen_synthetic(std::uint64_t seed, int count, const std::string & out_arg)
{
  const auto corpus = egograde::generate_synthetic_corpus(seed, count);
  egograde::write_corpus(corpus, out_arg);
  std::cout << "wrote " << corpus.size() << " scenarios to " << out_arg << "\n";
  return 0;
}

int run_rank(
  const std::string & runs_arg, const std::string & top_arg, const std::string & out_arg,
  const std::string & csv_arg)
{
  std::vector<egograde::EvaluationRun> runs;
  std::vector<fs::path> files;
  if (fs::is_directory(runs_arg)) {
    for (const auto & entry : fs::directory_iterator(runs_arg)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    files.emplace_back(runs_arg);
  }
  for (const fs::path & file : files) {
    auto loaded = egograde::load_runs(file);
    runs.insert(
      runs.end(), std::make_move_iterator(loaded.begin()), std::make_move_iterator(loaded.end()));
  }
  const auto report = egograde::rank_and_snr(runs, parse_top_ns(top_arg));
  egograde::save_ranking_report(report, out_arg);
  if (!csv_arg.empty()) {
    egograde::write_ranking_csv(report, csv_arg);
  }
  std::cout << "ranked " << report.pooled_total << " actors (" << report.flagged_total
            << " flagged) from " << runs.size() << " runs\n";
  return 0;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Motion-prediction evaluation over reachable ego trajectories"};
  app.require_subcommand(1);

  std::string scenario_arg;
  std::string config_arg;
  std::string out_arg;
  double keep_horizon = 0.0;
  std::uint64_t seed = 0;
  int count = 50;
  std::string runs_arg;
  std::string top_arg = "10,20,50";
  std::string csv_arg;

  auto * evaluate = app.add_subcommand("evaluate", "Evaluate scenarios and write a run report");
  evaluate->add_option("--scenario", scenario_arg, "Scenario JSON file or directory")
    ->required();
  evaluate->add_option("--config", config_arg, "Engine config JSON (defaults when omitted)");
  evaluate->add_option("--out", out_arg, "Output report path")->required();

  auto * cripple = app.add_subcommand("cripple", "Truncate prediction horizons");
  cripple->add_option("--scenario", scenario_arg, "Scenario JSON file or directory")->required();
  cripple->add_option("--keep-horizon", keep_horizon, "Seconds of prediction to keep")
    ->required();
  cripple->add_option("--config", config_arg, "Engine config JSON (for grid timing)");
  cripple->add_option("--out", out_arg, "Output file or directory")->required();

  auto * gen = app.add_subcommand("gen-synthetic", "Generate the synthetic scenario corpus");
  gen->add_option("--seed", seed, "Corpus seed")->required();
  gen->add_option("--count", count, "Number of scenarios")->required();
  gen->add_option("--out", out_arg, "Output directory")->required();

  auto * rank = app.add_subcommand("rank", "Rank actors across runs and report SNR");
  rank->add_option("--runs", runs_arg, "Run report file or directory of reports")->required();
  rank->add_option("--top", top_arg, "Comma-separated top-N list");
  rank->add_option("--out", out_arg, "Output report path")->required();
  rank->add_option("--csv", csv_arg, "Directory for plot-ready CSV tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(evaluate)) {
      return run_evaluate(scenario_arg, config_arg, out_arg);
    }
    if (app.got_subcommand(cripple)) {
      return run_cripple(scenario_arg, keep_horizon, config_arg, out_arg);
    }
    if (app.got_subcommand(gen)) {
      return run_gen_synthetic(seed, count, out_arg);
    }
    if (app.got_subcommand(rank)) {
      return run_rank(runs_arg, top_arg, out_arg, csv_arg);
    }
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
