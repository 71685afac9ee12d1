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

#include "coredse/baselines/common.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coredse/error.hpp"
#include "coredse/policy/distributions.hpp"

namespace coredse::baselines {

std::vector<double> GenomeToRaw(std::span<const double> genome, const space::ParameterSpace& space) {
  const auto& heads = space.heads();
  if (genome.size() != heads.size()) {
    throw ShapeError("genome has " + std::to_string(genome.size()) + " genes, space has " +
                     std::to_string(heads.size()) + " slots");
  }
  std::vector<double> raw(genome.size());
  for (std::size_t i = 0; i < genome.size(); ++i) {
    const double g = std::clamp(genome[i], 0.0, 1.0);
    if (heads[i].kind == space::HeadKind::kBeta) {
      raw[i] = std::clamp(g, policy::kActionEpsilon, 1.0 - policy::kActionEpsilon);
    } else {
      const auto k = static_cast<double>(heads[i].categories);
      raw[i] = std::min(std::floor(k * g), k - 1.0);
    }
  }
  return raw;
}

BatchScorer::BatchScorer(const train::Problem& problem, objective::RewardConfig reward, int workers)
    : problem_(problem), shaper_(std::move(reward)), workers_(workers) {}

train::EpisodeReport BatchScorer::Score(int batch_index, std::span<const std::vector<double>> genomes,
                                        std::vector<double>& rewards) {
  std::vector<std::vector<double>> raws;
  raws.reserve(genomes.size());
  for (const auto& g : genomes) raws.push_back(GenomeToRaw(g, problem_.space()));

  const auto outcomes = train::EvaluateBatch(problem_, raws, workers_);
  evaluations_ += static_cast<std::int64_t>(raws.size());
  rewards = shaper_.Shape(outcomes);

  const auto& weights = shaper_.config().weights;
  train::EpisodeReport report;
  report.episode = batch_index;
  report.samples.resize(raws.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < raws.size(); ++k) {
    const auto& o = outcomes[k];
    auto& s = report.samples[k];
    s.action_hash = train::ActionHash(raws[k]);
    s.reward = rewards[k];
    s.valid = !o.anomalous;
    s.feasible = o.feasible();
    s.violation_sum = o.anomalous ? 0.0 : o.violation_sum();
    if (s.feasible) s.objective = objective::ObjectiveValue(o, weights);
    sum += rewards[k];
    if (!best_ || rewards[k] > best_->reward) {
      best_ = train::BestRecord{raws[k], rewards[k], s.objective, o, batch_index, static_cast<int>(k)};
    }
    if (s.objective && (!best_feasible_ || *s.objective < *best_feasible_->objective)) {
      best_feasible_ = train::BestRecord{raws[k], rewards[k], s.objective, o, batch_index, static_cast<int>(k)};
    }
  }
  if (!raws.empty()) {
    report.batch_mean = sum / static_cast<double>(raws.size());
    report.running_reward = shaper_.Commit(rewards, outcomes);
  } else {
    report.running_reward = shaper_.state().running;
  }
  if (best_) report.best_reward = best_->reward;
  if (best_feasible_) report.best_objective = best_feasible_->objective;
  ++batches_;
  return report;
}

train::TrainResult BatchScorer::Result() const {
  train::TrainResult r;
  r.status = evaluations_ == 0 ? train::TrainStatus::kNoSamples : train::TrainStatus::kCompleted;
  r.best = best_;
  r.best_feasible = best_feasible_;
  r.evaluations = evaluations_;
  r.episodes = batches_;
  return r;
}

}  // namespace coredse::baselines
