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
#include <vector>

#include "coredse/policy/distributions.hpp"
#include "coredse/policy/policy.hpp"
#include "coredse/space/param_space.hpp"

namespace coredse::objective {

// Probability ratios are formed from log-ratios clamped to this magnitude.
inline constexpr double kMaxLogRatio = 20.0;

struct SurrogateCoefficients {
  double beta_r = 1.0;  // KL factor
  double beta_e = 1.0;  // entropy factor for this episode
};

struct SurrogateTerms {
  double value = 0.0;   // update - beta_r * kl + beta_e * entropy
  double update = 0.0;  // (1/E) sum_k ratio_k * A_k
  double kl = 0.0;      // sum over heads of KL(current || snapshot)
  double entropy = 0.0;
  std::vector<double> grad_raw;  // d(value)/d(raw outputs); empty unless requested
};

// Objective as a function of the current distributions. 'raw' are the network
// outputs that produced 'current'; the snapshot holds the distributions the
// actions were sampled from.
SurrogateTerms SurrogateFromHeads(std::span<const double> raw, const policy::DistributionSet& current,
                                  const policy::DistributionSet& snapshot,
                                  std::span<const space::CompoundAction> actions,
                                  std::span<const double> advantages, const SurrogateCoefficients& coeffs,
                                  bool want_gradient);

struct SurrogateResult {
  SurrogateTerms terms;
  std::vector<double> gradient;  // d(value)/d(theta); empty unless requested
};

// Full objective at the policy's current parameters, with the exact gradient
// with respect to every network parameter.
SurrogateResult SurrogateObjective(const policy::Policy& policy, const policy::DistributionSet& snapshot,
                                   std::span<const space::CompoundAction> actions,
                                   std::span<const double> advantages, const SurrogateCoefficients& coeffs,
                                   bool want_gradient = true);

}  // namespace coredse::objective
