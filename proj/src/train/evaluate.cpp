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

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "coredse/train/problem.hpp"

namespace coredse::train {

namespace {

objective::EvalOutcome Guarded(const std::function<objective::EvalOutcome(std::size_t)>& eval, std::size_t i) {
  try {
    return eval(i);
  } catch (const std::exception& e) {
    return objective::EvalOutcome::Anomalous(std::string("evaluator failed: ") + e.what());
  } catch (...) {
    return objective::EvalOutcome::Anomalous("evaluator failed");
  }
}

}  // namespace

std::vector<objective::EvalOutcome> EvaluateBatch(
    std::size_t n, const std::function<objective::EvalOutcome(std::size_t)>& eval, int workers) {
  std::vector<objective::EvalOutcome> out(n);
  const std::size_t threads = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = Guarded(eval, i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) out[i] = Guarded(eval, i);
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

std::vector<objective::EvalOutcome> EvaluateBatch(const Problem& problem,
                                                  std::span<const std::vector<double>> raws, int workers) {
  return EvaluateBatch(
      raws.size(), [&](std::size_t i) { return problem.Evaluate(raws[i]); }, workers);
}

}  // namespace coredse::train
