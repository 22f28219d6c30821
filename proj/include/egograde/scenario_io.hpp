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

#ifndef EGOGRADE_SCENARIO_IO_HPP_
#define EGOGRADE_SCENARIO_IO_HPP_

#include <filesystem>
#include <string>

#include "egograde/baseline.hpp"
#include "egograde/beelines.hpp"
#include "egograde/grid.hpp"
#include "egograde/metrics.hpp"
#include "egograde/occupancy.hpp"

namespace egograde
{

/// Everything the evaluation loop needs besides the scenario itself.
struct EngineConfig
{
  GridSpec grid;
  DistributionConfig dist;
  SamplingConfig sampling;
  MetricConfig metrics;
  BaselineConfig baseline;

  void validate() const;
};

/// Reads a scenario file. The scenario id defaults to the file stem when the
/// file carries no "scenario_id" key.
Scenario load_scenario(const std::filesystem::path & file);

void save_scenario(const Scenario & scenario, const std::filesystem::path & file);

/// Reads a config file; every key is optional and falls back to the
/// defaults above. Angles are given in degrees ("theta_max_deg").
EngineConfig load_config(const std::filesystem::path & file);

std::string config_to_json_string(const EngineConfig & config);

}  // namespace egograde

#endif  // EGOGRADE_SCENARIO_IO_HPP_
