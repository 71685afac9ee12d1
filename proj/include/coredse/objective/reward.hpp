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

#include <optional>
#include <span>
#include <vector>

#include "coredse/objective/outcome.hpp"

namespace coredse::objective {

struct RewardConfig {
  // One weight per metric; negative weights turn "lower is better" metrics
  // into rewards.
  std::vector<double> weights;
  double alpha_c = 1.0;  // violation penalty rate
  double alpha_p = 1.0;  // anomalous-design penalty rate
  double r_ano = -1e7;   // anomalous reward in the first episode
  double alpha_r = 0.2;  // running-reward renewal rate
  double beta_r = 1.0;   // KL factor
  double beta_e_start = 1.0;
  double beta_e_end = 0.02;
  // When false, every violating or anomalous design receives fixed_penalty.
  bool shaping = true;
  double fixed_penalty = -1e7;

  void Validate() const;
};

// w^T U - alpha_c * sum_j max(h_j, 0). Requires a non-anomalous outcome.
double ScalarReward(const EvalOutcome& outcome, const RewardConfig& cfg);

// Objective to minimize, -w^T U, ignoring violations. Requires a non-anomalous
// outcome.
double ObjectiveValue(const EvalOutcome& outcome, std::span<const double> weights);

// Reward for a design the evaluator could not score. In episode 1 (or when a
// batch mean is unavailable) this is r_ano; afterwards
// min(prev_mean, running_prev) - alpha_p * cur_mean, with both means taken
// over the non-anomalous designs of their batch.
double AnomalousReward(std::optional<double> prev_batch_mean, double running_prev,
                       std::optional<double> cur_batch_mean, int episode, const RewardConfig& cfg);

// alpha_r * mean(batch) + (1 - alpha_r) * running_prev.
double UpdateRunning(double running_prev, std::span<const double> batch_rewards, double alpha_r);

// reward_k - running, elementwise.
std::vector<double> Advantages(std::span<const double> rewards, double running);

// Carries the state the shaped reward depends on across episodes: the
// episode counter, the running reward and the previous batch's valid mean.
class RewardShaper {
 public:
  struct State {
    int episode = 1;  // 1-based index of the next batch
    double running = 0.0;
    std::optional<double> prev_valid_mean;
  };

  explicit RewardShaper(RewardConfig cfg);

  // Rewards for the current episode's outcomes; does not advance state.
  std::vector<double> Shape(std::span<const EvalOutcome> outcomes) const;
  // Folds the batch into the running reward, remembers its valid mean and
  // moves to the next episode. Returns the new running reward.
  double Commit(std::span<const double> rewards, std::span<const EvalOutcome> outcomes);

  const RewardConfig& config() const { return cfg_; }
  const State& state() const { return state_; }
  void Restore(const State& s) { state_ = s; }

 private:
  RewardConfig cfg_;
  State state_;
};

}  // namespace coredse::objective
