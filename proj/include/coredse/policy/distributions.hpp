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
#include <variant>
#include <vector>

#include "coredse/policy/rng.hpp"
#include "coredse/space/param_space.hpp"

namespace coredse::policy {

struct BetaDist {
  double alpha = 1.0;
  double beta = 1.0;
};

struct CategoricalDist {
  std::vector<double> probs;
  std::vector<double> log_probs;
};

using HeadDistribution = std::variant<BetaDist, CategoricalDist>;

// One distribution per policy head.
struct DistributionSet {
  std::vector<HeadDistribution> heads;

  std::size_t size() const { return heads.size(); }
};

// Beta draws are clamped to [kActionEpsilon, 1 - kActionEpsilon].
inline constexpr double kActionEpsilon = 1e-6;

// Beta heads read two raw outputs and use alpha = 1 + softplus(r0),
// beta = 1 + softplus(r1); categorical heads read k logits.
DistributionSet MakeDistributions(std::span<const double> raw, std::span<const space::HeadSpec> heads);
CategoricalDist CategoricalFromLogits(std::span<const double> logits);

double BetaLogPdf(const BetaDist& d, double x);
double BetaEntropy(const BetaDist& d);
double BetaKl(const BetaDist& p, const BetaDist& q);
double CategoricalEntropy(const CategoricalDist& d);
double CategoricalKl(const CategoricalDist& p, const CategoricalDist& q);

space::CompoundAction Sample(const DistributionSet& dists, Rng& rng);
// Sum over heads. Throws DomainError for Beta values outside (0, 1).
double LogProb(const DistributionSet& dists, std::span<const double> action);
double Entropy(const DistributionSet& dists);
// Sum over heads of KL(p_i || q_i).
double Kl(const DistributionSet& p, const DistributionSet& q);

// The functions below add scale * d(quantity)/d(raw outputs) into grad_raw,
// where raw are the network outputs that produced 'dists'.
void AccumulateLogProbGrad(std::span<const double> raw, const DistributionSet& dists,
                           std::span<const double> action, double scale, std::span<double> grad_raw);
void AccumulateEntropyGrad(std::span<const double> raw, const DistributionSet& dists, double scale,
                           std::span<double> grad_raw);
// Gradient of KL(current || fixed) with respect to the raw outputs of 'current'.
void AccumulateKlGrad(std::span<const double> raw, const DistributionSet& current,
                      const DistributionSet& fixed, double scale, std::span<double> grad_raw);

}  // namespace coredse::policy
