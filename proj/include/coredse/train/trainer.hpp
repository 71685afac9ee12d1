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
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "coredse/objective/reward.hpp"
#include "coredse/policy/policy.hpp"
#include "coredse/train/adam.hpp"
#include "coredse/train/problem.hpp"

namespace coredse::train {

struct TrainConfig {
  int batch_size = 32;
  int max_episodes = 2000;
  std::int64_t sample_budget = 40000;
  double target_reward = std::numeric_limits<double>::infinity();
  AdamConfig adam;
  std::uint64_t seed = 0;
  int workers = 1;
  objective::RewardConfig reward;
  policy::PolicyArch arch;

  void Validate() const;
  // min(max_episodes, sample_budget / batch_size)
  int EpisodesToRun() const;
};

// start + (end - start) * t / (t_max - 1); start when t_max == 1.
double EntropyCoefficient(int t, int t_max, double start, double end);

// FNV-1a over the bit patterns of the raw action values.
std::uint64_t ActionHash(std::span<const double> raw);

struct SampleRecord {
  std::uint64_t action_hash = 0;
  double reward = 0.0;
  bool valid = false;     // scored by the evaluator
  bool feasible = false;  // scored and no constraint violated
  double violation_sum = 0.0;
  std::optional<double> objective;  // set for feasible samples
};

struct EpisodeReport {
  int episode = 0;  // 0-based
  std::vector<SampleRecord> samples;
  double batch_mean = 0.0;
  double running_reward = 0.0;
  double best_reward = 0.0;
  std::optional<double> best_objective;
  double surrogate = 0.0;
  double entropy_coefficient = 0.0;
  double grad_norm = 0.0;
  double wall_seconds = 0.0;
};

struct BestRecord {
  std::vector<double> raw;
  double reward = 0.0;
  std::optional<double> objective;
  objective::EvalOutcome outcome;
  int episode = 0;
  int sample = 0;
};

enum class TrainStatus { kNoSamples, kCompleted, kTargetReached };

struct TrainResult {
  TrainStatus status = TrainStatus::kNoSamples;
  std::optional<BestRecord> best;           // highest shaped reward
  std::optional<BestRecord> best_feasible;  // lowest objective among feasible samples
  std::vector<EpisodeReport> history;       // episodes run by this call
  std::int64_t evaluations = 0;
  int episodes = 0;
};

class Trainer {
 public:
  Trainer(const Problem& problem, TrainConfig cfg);

  // One full episode: sample, evaluate, shape, track best, update the running
  // reward, then take a single ascent step on the surrogate objective.
  EpisodeReport RunEpisode();

  // Runs episodes until the budget or the target reward is reached.
  TrainResult Train(const std::function<void(const EpisodeReport&)>& on_episode = {});

  bool Done() const;
  int episode() const { return episode_; }
  std::int64_t evaluations() const { return evaluations_; }
  TrainResult Result() const;

  const TrainConfig& config() const { return cfg_; }
  const policy::Policy& policy() const { return policy_; }
  policy::Policy& policy() { return policy_; }
  const objective::RewardShaper& shaper() const { return shaper_; }

  // Episode-boundary checkpoint: policy.bin, adam_m.bin, adam_v.bin and
  // state.json inside dir.
  void SaveCheckpoint(const std::filesystem::path& dir) const;
  void LoadCheckpoint(const std::filesystem::path& dir);

 private:
  const Problem& problem_;
  TrainConfig cfg_;
  policy::Policy policy_;
  Adam adam_;
  objective::RewardShaper shaper_;
  int episode_ = 0;
  std::int64_t evaluations_ = 0;
  bool target_reached_ = false;
  std::optional<BestRecord> best_;
  std::optional<BestRecord> best_feasible_;
};

}  // namespace coredse::train
