// Copyright 2026 The coredse Authors
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

#pragma once

#include <cstdint>
#include <functional>

#include "coredse/objective/reward.hpp"
#include "coredse/train/problem.hpp"
#include "coredse/train/trainer.hpp"

namespace coredse::baselines {

struct GaConfig {
  int population = 32;
  // Generations after the initial population; a negative value runs until the
  // sample budget is spent.
  int generations = -1;
  int tournament = 3;
  double crossover_rate = 0.9;
  double mutation_rate = 0.1;
  double mutation_sigma = 0.1;
  int elitism = 1;

  void Validate() const;
};

// Evaluation count: population + generations * (population - elitism),
// truncated to the budget. The final generation may be partial.
std::int64_t GaEvaluations(const GaConfig& cfg, std::int64_t budget);

train::TrainResult RunGenetic(const train::Problem& problem, const GaConfig& cfg,
                              const objective::RewardConfig& reward, std::int64_t budget, std::uint64_t seed,
                              int workers, const std::function<void(const train::EpisodeReport&)>& on_batch = {});

}  // namespace coredse::baselines
