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

#include "coredse/baselines/random_search.hpp"

#include <algorithm>

#include "coredse/baselines/common.hpp"
#include "coredse/error.hpp"
#include "coredse/policy/rng.hpp"

namespace coredse::baselines {

namespace {
constexpr std::uint64_t kRandomStreamTag = 0x72616e646f6d3031ULL;
}  // namespace

train::TrainResult RunRandomSearch(const train::Problem& problem, const objective::RewardConfig& reward,
                                   std::int64_t budget, int batch_size, std::uint64_t seed, int workers,
                                   const std::function<void(const train::EpisodeReport&)>& on_batch) {
  if (batch_size < 1) throw ConfigError("random.batch_size must be >= 1");
  BatchScorer scorer(problem, reward, workers);
  const std::size_t genes = problem.space().heads().size();
  std::vector<double> rewards;
  int batch_index = 0;
  for (std::int64_t start = 0; start < budget; start += batch_size) {
    const std::int64_t n = std::min<std::int64_t>(batch_size, budget - start);
    std::vector<std::vector<double>> batch(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      auto rng = policy::Rng::Stream(seed, kRandomStreamTag, static_cast<std::uint64_t>(start + i));
      auto& g = batch[static_cast<std::size_t>(i)];
      g.resize(genes);
      for (auto& x : g) x = rng.Uniform();
    }
    const auto report = scorer.Score(batch_index++, batch, rewards);
    if (on_batch) on_batch(report);
  }
  return scorer.Result();
}

}  // namespace coredse::baselines
