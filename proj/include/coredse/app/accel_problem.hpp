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

#include <span>

#include <json.hpp>

#include "coredse/accel/cost_model.hpp"
#include "coredse/accel/design.hpp"
#include "coredse/space/decode.hpp"
#include "coredse/train/problem.hpp"

namespace coredse::app {

// Accelerator co-design as a search problem: decode a raw action into a
// DesignConfig and score it with the analytical cost model.
class AccelProblem : public train::Problem {
 public:
  AccelProblem(accel::AcceleratorSpace space, accel::Platform platform, accel::CostConstants cost,
               space::DecodeMode mode = space::DecodeMode::kScaled);

  const space::ParameterSpace& space() const override { return accel_.space(); }
  objective::EvalOutcome Evaluate(std::span<const double> raw) const override;

  accel::DesignConfig Design(std::span<const double> raw) const;
  objective::EvalOutcome EvaluateDesign(const accel::DesignConfig& design) const;

  const accel::AcceleratorSpace& accel_space() const { return accel_; }
  const accel::Platform& platform() const { return platform_; }
  space::DecodeMode mode() const { return mode_; }

 private:
  accel::AcceleratorSpace accel_;
  accel::Platform platform_;
  accel::CostConstants cost_;
  space::DecodeMode mode_;
};

nlohmann::json DesignToJson(const accel::DesignConfig& design);

}  // namespace coredse::app
