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

// Genome i is drawn from its own stream, so a smaller budget sees a prefix of
// the samples a larger one sees.
train::TrainResult RunRandomSearch(const train::Problem& problem, const objective::RewardConfig& reward,
                                   std::int64_t budget, int batch_size, std::uint64_t seed, int workers,
                                   const std::function<void(const train::EpisodeReport&)>& on_batch = {});

}  // namespace coredse::baselines
