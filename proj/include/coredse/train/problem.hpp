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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "coredse/objective/outcome.hpp"
#include "coredse/space/param_space.hpp"

namespace coredse::train {

// A search problem: a parameter space plus an evaluator that decodes a raw
// action and scores it. Evaluate must be deterministic and safe to call from
// several threads at once.
class Problem {
 public:
  virtual ~Problem() = default;
  virtual const space::ParameterSpace& space() const = 0;
  virtual objective::EvalOutcome Evaluate(std::span<const double> raw) const = 0;
};

// Runs eval(0..n-1) on up to 'workers' threads. Results are stored by index,
// so the output does not depend on the worker count. An exception thrown for
// one index turns that slot into an anomalous outcome.
std::vector<objective::EvalOutcome> EvaluateBatch(
    std::size_t n, const std::function<objective::EvalOutcome(std::size_t)>& eval, int workers);

std::vector<objective::EvalOutcome> EvaluateBatch(const Problem& problem,
                                                  std::span<const std::vector<double>> raws, int workers);

}  // namespace coredse::train
