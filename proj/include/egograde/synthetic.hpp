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

#ifndef EGOGRADE_SYNTHETIC_HPP_
#define EGOGRADE_SYNTHETIC_HPP_

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "egograde/occupancy.hpp"

namespace egograde
{

/// Deterministic corpus of randomized scenarios cycling through five
/// templates: crossing pedestrian, lead-vehicle stop, cut-in cyclist,
/// off-road walker, queued traffic. The first three inject a genuine
/// ego-path conflict (actors labeled unsafe); each scenario labels one
/// actor of interest and ships predictions that copy ground truth exactly.
std::vector<Scenario> generate_synthetic_corpus(std::uint64_t seed, int count);

/// Writes one scenario file per entry, named after the scenario id.
void write_corpus(const std::vector<Scenario> & corpus, const std::filesystem::path & dir);

/// Fixed-parameter scene pair exercising the metric/displacement
/// disagreement: (a) a pedestrian stepping slowly into the ego lane (small
/// displacement error once predictions are cut short, genuine conflict),
/// (b) a jogger leaving the road (large displacement error, no conflict).
std::pair<Scenario, Scenario> make_discordance_pair();

}  // namespace egograde

#endif  // EGOGRADE_SYNTHETIC_HPP_
