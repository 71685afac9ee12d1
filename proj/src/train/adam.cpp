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

#include "coredse/train/adam.hpp"

#include <cmath>
#include <string>

#include "coredse/error.hpp"
#include "coredse/simd/kernels.hpp"

namespace coredse::train {

void AdamConfig::Validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw ConfigError("train.learning_rate must be > 0");
  if (!(beta1 >= 0.0 && beta1 < 1.0)) throw ConfigError("train.adam_beta1 must lie in [0, 1)");
  if (!(beta2 >= 0.0 && beta2 < 1.0)) throw ConfigError("train.adam_beta2 must lie in [0, 1)");
  if (!(epsilon > 0.0)) throw ConfigError("train.adam_epsilon must be > 0");
}

Adam::Adam(std::size_t num_params, AdamConfig cfg) : cfg_(cfg), m_(num_params, 0.0), v_(num_params, 0.0) {
  cfg_.Validate();
}

void Adam::Step(std::span<double> params, std::span<const double> grad) {
  if (params.size() != m_.size() || grad.size() != m_.size()) {
    throw ShapeError("adam: expected " + std::to_string(m_.size()) + " parameters, got " +
                     std::to_string(params.size()) + " and " + std::to_string(grad.size()) + " gradients");
  }
  ++steps_;
  const double t = static_cast<double>(steps_);
  const simd::AdamStep step{cfg_.learning_rate,
                            cfg_.beta1,
                            cfg_.beta2,
                            cfg_.epsilon,
                            1.0 - std::pow(cfg_.beta1, t),
                            1.0 - std::pow(cfg_.beta2, t)};
  simd::Active().adam(params.data(), grad.data(), m_.data(), v_.data(), m_.size(), step);
}

void Adam::Restore(std::int64_t steps, std::vector<double> m, std::vector<double> v) {
  if (m.size() != m_.size() || v.size() != v_.size()) throw ShapeError("adam: restored moments have the wrong size");
  if (steps < 0) throw Error("adam: negative step count");
  steps_ = steps;
  m_ = std::move(m);
  v_ = std::move(v);
}

}  // namespace coredse::train
