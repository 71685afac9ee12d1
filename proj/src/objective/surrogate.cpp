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

#include "coredse/objective/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coredse/error.hpp"

namespace coredse::objective {

SurrogateTerms SurrogateFromHeads(std::span<const double> raw, const policy::DistributionSet& current,
                                  const policy::DistributionSet& snapshot,
                                  std::span<const space::CompoundAction> actions,
                                  std::span<const double> advantages, const SurrogateCoefficients& coeffs,
                                  bool want_gradient) {
  if (actions.size() != advantages.size()) {
    throw ShapeError("surrogate: " + std::to_string(actions.size()) + " actions but " +
                     std::to_string(advantages.size()) + " advantages");
  }
  if (actions.empty()) throw ShapeError("surrogate: empty batch");

  SurrogateTerms t;
  if (want_gradient) t.grad_raw.assign(raw.size(), 0.0);
  const double inv_e = 1.0 / static_cast<double>(actions.size());

  for (std::size_t k = 0; k < actions.size(); ++k) {
    const double log_ratio = policy::LogProb(current, actions[k].raw) - policy::LogProb(snapshot, actions[k].raw);
    if (std::isnan(log_ratio)) throw NumericError("surrogate: non-finite probability ratio for sample " + std::to_string(k));
    const double clamped = std::clamp(log_ratio, -kMaxLogRatio, kMaxLogRatio);
    const double ratio = std::exp(clamped);
    t.update += inv_e * ratio * advantages[k];
    if (want_gradient && clamped == log_ratio && advantages[k] != 0.0) {
      policy::AccumulateLogProbGrad(raw, current, actions[k].raw, inv_e * ratio * advantages[k], t.grad_raw);
    }
  }

  t.kl = policy::Kl(current, snapshot);
  t.entropy = policy::Entropy(current);
  t.value = t.update - coeffs.beta_r * t.kl + coeffs.beta_e * t.entropy;
  if (want_gradient) {
    if (coeffs.beta_r != 0.0) policy::AccumulateKlGrad(raw, current, snapshot, -coeffs.beta_r, t.grad_raw);
    if (coeffs.beta_e != 0.0) policy::AccumulateEntropyGrad(raw, current, coeffs.beta_e, t.grad_raw);
  }
  if (!std::isfinite(t.value)) throw NumericError("surrogate: objective is not finite");
  return t;
}

SurrogateResult SurrogateObjective(const policy::Policy& policy, const policy::DistributionSet& snapshot,
                                   std::span<const space::CompoundAction> actions,
                                   std::span<const double> advantages, const SurrogateCoefficients& coeffs,
                                   bool want_gradient) {
  const auto eval = policy.Forward();
  SurrogateResult r;
  r.terms = SurrogateFromHeads(eval.raw, eval.dists, snapshot, actions, advantages, coeffs, want_gradient);
  if (want_gradient) {
    r.gradient.assign(policy.network().num_params(), 0.0);
    policy.Backward(eval, r.terms.grad_raw, r.gradient);
    for (double g : r.gradient) {
      if (!std::isfinite(g)) throw NumericError("surrogate: non-finite parameter gradient");
    }
  }
  return r;
}

}  // namespace coredse::objective
