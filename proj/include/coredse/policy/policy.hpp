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
#include <cstdint>
#include <span>
#include <vector>

#include "coredse/policy/distributions.hpp"
#include "coredse/policy/mlp.hpp"
#include "coredse/space/param_space.hpp"

namespace coredse::policy {

struct PolicyArch {
  std::size_t input_width = 512;
  std::vector<std::size_t> hidden_widths{4096, 4096, 4096};
};

// The stochastic policy: an MLP mapping a constant context vector to one
// distribution per head. Heads are independent given the context; structural
// coupling between parameters comes from the decoder.
class Policy {
 public:
  Policy(std::vector<space::HeadSpec> heads, const PolicyArch& arch, std::uint64_t init_seed);

  struct Evaluation {
    std::vector<double> raw;
    Mlp::Tape tape;
    DistributionSet dists;
  };

  Evaluation Forward() const;
  // Accumulates d(objective)/d(theta) into grad given d(objective)/d(raw outputs).
  void Backward(const Evaluation& eval, std::span<const double> grad_raw, std::span<double> grad) const;

  const std::vector<space::HeadSpec>& heads() const { return heads_; }
  const std::vector<double>& context() const { return context_; }
  Mlp& network() { return net_; }
  const Mlp& network() const { return net_; }

 private:
  std::vector<space::HeadSpec> heads_;
  std::vector<double> context_;
  Mlp net_;
};

}  // namespace coredse::policy
