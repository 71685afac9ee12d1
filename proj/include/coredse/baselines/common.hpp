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
#include <optional>
#include <span>
#include <vector>

#include "coredse/objective/reward.hpp"
#include "coredse/space/param_space.hpp"
#include "coredse/train/problem.hpp"
#include "coredse/train/trainer.hpp"

namespace coredse::baselines {

// Maps a genome (one gene in [0, 1] per action slot) to the raw action layout
// the decoder expects: Beta slots are clamped away from 0 and 1, categorical
// slots become min(floor(k * g), k - 1).
std::vector<double> GenomeToRaw(std::span<const double> genome, const space::ParameterSpace& space);

// Evaluates batches through the shared shaped reward and keeps the same
// best-so-far bookkeeping as the trainer, so logs are interchangeable.
class BatchScorer {
 public:
  BatchScorer(const train::Problem& problem, objective::RewardConfig reward, int workers);

  // Scores one batch of genomes; rewards are returned in input order.
  train::EpisodeReport Score(int batch_index, std::span<const std::vector<double>> genomes,
                             std::vector<double>& rewards);

  train::TrainResult Result() const;
  std::int64_t evaluations() const { return evaluations_; }

 private:
  const train::Problem& problem_;
  objective::RewardShaper shaper_;
  int workers_;
  std::int64_t evaluations_ = 0;
  int batches_ = 0;
  std::optional<train::BestRecord> best_;
  std::optional<train::BestRecord> best_feasible_;
};

}  // namespace coredse::baselines
