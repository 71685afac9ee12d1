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

#include "coredse/policy/policy.hpp"

#include <utility>

#include "coredse/error.hpp"

namespace coredse::policy {

Policy::Policy(std::vector<space::HeadSpec> heads, const PolicyArch& arch, std::uint64_t init_seed)
    : heads_(std::move(heads)), context_(arch.input_width, 1.0) {
  if (arch.input_width == 0) throw ConfigError("policy: input width must be positive");
  std::size_t out = 0;
  for (const auto& h : heads_) out += static_cast<std::size_t>(h.output_width());
  if (out == 0) throw ConfigError("policy: the design space has no parameters");
  std::vector<std::size_t> widths{arch.input_width};
  widths.insert(widths.end(), arch.hidden_widths.begin(), arch.hidden_widths.end());
  widths.push_back(out);
  net_ = Mlp(std::move(widths));
  net_.InitUniform(init_seed);
}

Policy::Evaluation Policy::Forward() const {
  Evaluation e;
  e.raw = net_.Forward(context_, &e.tape);
  e.dists = MakeDistributions(e.raw, heads_);
  return e;
}

void Policy::Backward(const Evaluation& eval, std::span<const double> grad_raw, std::span<double> grad) const {
  net_.Backward(eval.tape, grad_raw, grad);
}

}  // namespace coredse::policy
