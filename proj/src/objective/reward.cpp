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

#include "coredse/objective/reward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coredse/error.hpp"

namespace coredse::objective {

namespace {

std::optional<double> ValidMean(std::span<const double> rewards, std::span<const EvalOutcome> outcomes) {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (!outcomes[k].anomalous) {
      sum += rewards[k];
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace

void RewardConfig::Validate() const {
  if (weights.empty()) throw ConfigError("reward.weights must not be empty");
  if (!(alpha_r >= 0.0 && alpha_r <= 1.0)) throw ConfigError("reward.alpha_r must lie in [0, 1]");
  if (!(alpha_c >= 0.0)) throw ConfigError("reward.alpha_c must be >= 0");
  if (!(alpha_p >= 0.0)) throw ConfigError("reward.alpha_p must be >= 0");
  if (!(beta_r >= 0.0)) throw ConfigError("reward.beta_r must be >= 0");
}

double ScalarReward(const EvalOutcome& outcome, const RewardConfig& cfg) {
  if (outcome.anomalous) throw Error("scalar reward requested for an anomalous outcome");
  if (outcome.metrics.size() != cfg.weights.size()) {
    throw ShapeError("reward: " + std::to_string(outcome.metrics.size()) + " metrics but " +
                     std::to_string(cfg.weights.size()) + " weights");
  }
  double r = 0.0;
  for (std::size_t j = 0; j < cfg.weights.size(); ++j) {
    if (cfg.weights[j] != 0.0) r += cfg.weights[j] * outcome.metrics[j];
  }
  for (const auto& v : outcome.violations) r -= cfg.alpha_c * std::max(v.residual, 0.0);
  return r;
}

double ObjectiveValue(const EvalOutcome& outcome, std::span<const double> weights) {
  if (outcome.anomalous) throw Error("objective requested for an anomalous outcome");
  if (outcome.metrics.size() != weights.size()) throw ShapeError("objective: metrics and weights differ in length");
  double v = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] != 0.0) v -= weights[j] * outcome.metrics[j];
  }
  return v;
}

double AnomalousReward(std::optional<double> prev_batch_mean, double running_prev,
                       std::optional<double> cur_batch_mean, int episode, const RewardConfig& cfg) {
  if (episode < 1) throw Error("anomalous reward: episode index starts at 1");
  if (episode == 1 || !prev_batch_mean || !cur_batch_mean) return cfg.r_ano;
  return std::min(*prev_batch_mean, running_prev) - cfg.alpha_p * *cur_batch_mean;
}

double UpdateRunning(double running_prev, std::span<const double> batch_rewards, double alpha_r) {
  if (batch_rewards.empty()) throw Error("running reward: empty batch");
  double sum = 0.0;
  for (double r : batch_rewards) sum += r;
  const double mean = sum / static_cast<double>(batch_rewards.size());
  return alpha_r * mean + (1.0 - alpha_r) * running_prev;
}

std::vector<double> Advantages(std::span<const double> rewards, double running) {
  std::vector<double> a;
  a.reserve(rewards.size());
  for (double r : rewards) a.push_back(r - running);
  return a;
}

RewardShaper::RewardShaper(RewardConfig cfg) : cfg_(std::move(cfg)) { cfg_.Validate(); }

std::vector<double> RewardShaper::Shape(std::span<const EvalOutcome> outcomes) const {
  std::vector<double> rewards(outcomes.size(), 0.0);
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    if (o.anomalous) continue;
    if (!cfg_.shaping && !o.violations.empty()) {
      rewards[k] = cfg_.fixed_penalty;
    } else {
      rewards[k] = ScalarReward(o, cfg_);
    }
  }
  const std::optional<double> cur_mean = ValidMean(rewards, outcomes);
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (!outcomes[k].anomalous) continue;
    rewards[k] = cfg_.shaping ? AnomalousReward(state_.prev_valid_mean, state_.running, cur_mean,
                                                state_.episode, cfg_)
                              : cfg_.fixed_penalty;
  }
  return rewards;
}

double RewardShaper::Commit(std::span<const double> rewards, std::span<const EvalOutcome> outcomes) {
  if (rewards.size() != outcomes.size()) throw ShapeError("reward shaper: rewards and outcomes differ in length");
  state_.running = UpdateRunning(state_.running, rewards, cfg_.alpha_r);
  state_.prev_valid_mean = ValidMean(rewards, outcomes);
  ++state_.episode;
  return state_.running;
}

}  // namespace coredse::objective
