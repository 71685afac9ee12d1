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

#include "coredse/app/accel_problem.hpp"

#include <string>

namespace coredse::app {

AccelProblem::AccelProblem(accel::AcceleratorSpace space, accel::Platform platform, accel::CostConstants cost,
                           space::DecodeMode mode)
    : accel_(std::move(space)), platform_(std::move(platform)), cost_(cost), mode_(mode) {
  cost_.Validate();
}

accel::DesignConfig AccelProblem::Design(std::span<const double> raw) const {
  space::CompoundAction action;
  action.raw.assign(raw.begin(), raw.end());
  return accel_.DecodeConfig(action, mode_);
}

objective::EvalOutcome AccelProblem::EvaluateDesign(const accel::DesignConfig& design) const {
  return accel::Simulate(design, accel_.workload(), platform_, cost_);
}

objective::EvalOutcome AccelProblem::Evaluate(std::span<const double> raw) const {
  return EvaluateDesign(Design(raw));
}

nlohmann::json DesignToJson(const accel::DesignConfig& design) {
  using nlohmann::json;
  json layers = json::array();
  for (const auto& lm : design.layers) {
    json levels = json::array();
    for (int lvl = 0; lvl < accel::kLevels; ++lvl) {
      const auto& m = lm.level[lvl];
      json tiles = json::object();
      for (accel::Dim d : accel::kAllDims) tiles[std::string(1, accel::DimName(d))] = m.tiles[accel::Index(d)];
      levels.push_back({{"level", lvl == 0 ? "L1" : "L2"},
                        {"loop_order", accel::FormatLoopOrder(m.loop_order)},
                        {"parallel_dim", std::string(1, accel::DimName(m.parallel_dim))},
                        {"parallelism", m.parallelism},
                        {"tiles", tiles}});
    }
    layers.push_back({{"levels", levels}});
  }
  return {{"n_pe", design.n_pe}, {"l1_bytes", design.l1_bytes}, {"l2_bytes", design.l2_bytes}, {"layers", layers}};
}

}  // namespace coredse::app
