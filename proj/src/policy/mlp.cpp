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

#include "coredse/policy/mlp.hpp"

#include <cmath>
#include <string>

#include "coredse/error.hpp"
#include "coredse/policy/rng.hpp"
#include "coredse/simd/kernels.hpp"

namespace coredse::policy {

Mlp::Mlp(std::vector<std::size_t> widths) {
  if (widths.size() < 2) throw ConfigError("mlp: need at least input and output widths");
  std::size_t total = 0;
  for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
    if (widths[l] == 0 || widths[l + 1] == 0) throw ConfigError("mlp: layer widths must be positive");
    shapes_.push_back({widths[l + 1], widths[l]});
    offsets_.push_back(total);
    total += shapes_.back().param_count();
  }
  params_.assign(total, 0.0);
}

void Mlp::InitUniform(std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t l = 0; l < shapes_.size(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(shapes_[l].in));
    auto block = std::span<double>(params_).subspan(offsets_[l], shapes_[l].param_count());
    for (double& p : block) p = bound * (2.0 * rng.Uniform() - 1.0);
  }
}

std::span<double> Mlp::weights(std::size_t layer) {
  return std::span<double>(params_).subspan(offsets_.at(layer), shapes_[layer].weight_count());
}
std::span<const double> Mlp::weights(std::size_t layer) const {
  return std::span<const double>(params_).subspan(offsets_.at(layer), shapes_[layer].weight_count());
}
std::span<double> Mlp::bias(std::size_t layer) {
  return std::span<double>(params_).subspan(offsets_.at(layer) + shapes_[layer].weight_count(),
                                            shapes_[layer].out);
}
std::span<const double> Mlp::bias(std::size_t layer) const {
  return std::span<const double>(params_).subspan(offsets_.at(layer) + shapes_[layer].weight_count(),
                                                  shapes_[layer].out);
}

std::vector<double> Mlp::Forward(std::span<const double> input, Tape* tape) const {
  if (input.size() != input_width()) {
    throw ShapeError("mlp: input width " + std::to_string(input.size()) + ", expected " +
                     std::to_string(input_width()));
  }
  const auto& k = simd::Active();
  std::vector<double> x(input.begin(), input.end());
  if (tape != nullptr) {
    tape->values.clear();
    tape->values.push_back(x);
  }
  for (std::size_t l = 0; l < shapes_.size(); ++l) {
    const DenseShape& s = shapes_[l];
    std::vector<double> y(s.out);
    k.gemv(weights(l).data(), bias(l).data(), x.data(), y.data(), s.out, s.in);
    const bool hidden = l + 1 < shapes_.size();
    for (double& v : y) {
      if (!std::isfinite(v)) throw NumericError("mlp: non-finite activation in layer " + std::to_string(l));
      if (hidden && v < 0.0) v = 0.0;
    }
    x = std::move(y);
    if (tape != nullptr) tape->values.push_back(x);
  }
  return x;
}

void Mlp::Backward(const Tape& tape, std::span<const double> grad_output, std::span<double> grad) const {
  if (grad.size() != params_.size()) throw ShapeError("mlp: gradient buffer has the wrong size");
  if (grad_output.size() != output_width()) throw ShapeError("mlp: output gradient has the wrong width");
  if (tape.values.size() != shapes_.size() + 1) throw ShapeError("mlp: tape does not match network");

  const auto& k = simd::Active();
  std::vector<double> g(grad_output.begin(), grad_output.end());
  for (std::size_t l = shapes_.size(); l-- > 0;) {
    const DenseShape& s = shapes_[l];
    const std::vector<double>& x = tape.values[l];
    double* gw = grad.data() + offsets_[l];
    double* gb = gw + s.weight_count();
    const double* w = weights(l).data();
    std::vector<double> gx(l > 0 ? s.in : 0, 0.0);
    for (std::size_t o = 0; o < s.out; ++o) {
      const double go = g[o];
      if (go == 0.0) continue;
      k.axpy(go, x.data(), gw + o * s.in, s.in);
      gb[o] += go;
      if (l > 0) k.axpy(go, w + o * s.in, gx.data(), s.in);
    }
    if (l == 0) break;
    for (std::size_t j = 0; j < s.in; ++j) {
      if (!(x[j] > 0.0)) gx[j] = 0.0;
      if (!std::isfinite(gx[j])) throw NumericError("mlp: non-finite gradient in layer " + std::to_string(l));
    }
    g = std::move(gx);
  }
}

}  // namespace coredse::policy
