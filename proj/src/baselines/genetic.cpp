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

#include "coredse/baselines/genetic.hpp"

#include <algorithm>
#include <numeric>

#include "coredse/baselines/common.hpp"
#include "coredse/error.hpp"
#include "coredse/policy/rng.hpp"

namespace coredse::baselines {

namespace {

constexpr std::uint64_t kGaStreamTag = 0x67656e6574696331ULL;

struct Member {
  std::vector<double> genome;
  double fitness = 0.0;
};

std::size_t Tournament(const std::vector<Member>& pop, int k, policy::Rng& rng) {
  std::size_t best = rng.Below(pop.size());
  for (int i = 1; i < k; ++i) {
    const std::size_t c = rng.Below(pop.size());
    if (pop[c].fitness > pop[best].fitness) best = c;
  }
  return best;
}

}  // namespace

void GaConfig::Validate() const {
  if (population < 2) throw ConfigError("ga.population must be >= 2");
  if (tournament < 1) throw ConfigError("ga.tournament must be >= 1");
  if (elitism < 0 || elitism >= population) throw ConfigError("ga.elitism must lie in [0, population)");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw ConfigError("ga.crossover_rate must lie in [0, 1]");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw ConfigError("ga.mutation_rate must lie in [0, 1]");
  if (!(mutation_sigma >= 0.0)) throw ConfigError("ga.mutation_sigma must be >= 0");
}

std::int64_t GaEvaluations(const GaConfig& cfg, std::int64_t budget) {
  if (budget <= 0) return 0;
  if (cfg.generations < 0) return budget;
  const std::int64_t planned = static_cast<std::int64_t>(cfg.population) +
                               static_cast<std::int64_t>(cfg.generations) * (cfg.population - cfg.elitism);
  return std::min(budget, planned);
}

train::TrainResult RunGenetic(const train::Problem& problem, const GaConfig& cfg,
                              const objective::RewardConfig& reward, std::int64_t budget, std::uint64_t seed,
                              int workers, const std::function<void(const train::EpisodeReport&)>& on_batch) {
  cfg.Validate();
  BatchScorer scorer(problem, reward, workers);
  const std::int64_t total = GaEvaluations(cfg, budget);
  if (total == 0) return scorer.Result();

  auto rng = policy::Rng::Stream(seed, kGaStreamTag, 0);
  const std::size_t genes = problem.space().heads().size();

  const auto initial = static_cast<std::size_t>(std::min<std::int64_t>(cfg.population, total));
  std::vector<Member> pop(initial);
  std::vector<std::vector<double>> batch(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    batch[i].resize(genes);
    for (auto& g : batch[i]) g = rng.Uniform();
  }
  std::vector<double> rewards;
  int generation = 0;
  auto report = scorer.Score(generation, batch, rewards);
  if (on_batch) on_batch(report);
  for (std::size_t i = 0; i < initial; ++i) pop[i] = {std::move(batch[i]), rewards[i]};

  std::int64_t remaining = total - static_cast<std::int64_t>(initial);
  const auto elites = static_cast<std::size_t>(cfg.elitism);
  while (remaining > 0) {
    ++generation;
    std::vector<std::size_t> rank(pop.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return pop[a].fitness > pop[b].fitness; });

    const auto n_children =
        static_cast<std::size_t>(std::min<std::int64_t>(cfg.population - cfg.elitism, remaining));
    std::vector<std::vector<double>> children(n_children);
    for (auto& child : children) {
      const auto& p1 = pop[Tournament(pop, cfg.tournament, rng)].genome;
      const auto& p2 = pop[Tournament(pop, cfg.tournament, rng)].genome;
      child = p1;
      if (rng.Uniform() < cfg.crossover_rate) {
        for (std::size_t g = 0; g < genes; ++g) {
          if (rng.Uniform() < 0.5) child[g] = p2[g];
        }
      }
      for (auto& g : child) {
        if (rng.Uniform() < cfg.mutation_rate) g = std::clamp(g + cfg.mutation_sigma * rng.Normal(), 0.0, 1.0);
      }
    }

    report = scorer.Score(generation, children, rewards);
    if (on_batch) on_batch(report);

    std::vector<Member> next;
    next.reserve(elites + n_children);
    for (std::size_t i = 0; i < elites && i < rank.size(); ++i) next.push_back(pop[rank[i]]);
    for (std::size_t i = 0; i < n_children; ++i) next.push_back({std::move(children[i]), rewards[i]});
    pop = std::move(next);
    remaining -= static_cast<std::int64_t>(n_children);
  }
  return scorer.Result();
}

}  // namespace coredse::baselines
