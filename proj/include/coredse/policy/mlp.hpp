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

namespace coredse::policy {

// Shape of one dense layer: out x in weights (row-major) followed by out biases.
struct DenseShape {
  std::size_t out = 0;
  std::size_t in = 0;

  std::size_t weight_count() const { return out * in; }
  std::size_t param_count() const { return out * in + out; }
  bool operator==(const DenseShape&) const = default;
};

// Fully connected network with ReLU after every hidden layer and a linear
// output layer. All parameters live in one contiguous buffer so optimizers
// and checkpoints can treat them as a flat vector.
class Mlp {
 public:
  Mlp() = default;
  // widths = {input, hidden..., output}; needs at least two entries.
  explicit Mlp(std::vector<std::size_t> widths);

  // Per-activation record of a forward pass, consumed by Backward.
  struct Tape {
    // values[0] is the input; values[l + 1] is the output of layer l
    // (post-ReLU for hidden layers).
    std::vector<std::vector<double>> values;
  };

  // Uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)] for weights and biases.
  void InitUniform(std::uint64_t seed);

  // Throws NumericError naming the layer if any activation is non-finite.
  std::vector<double> Forward(std::span<const double> input, Tape* tape = nullptr) const;

  // Accumulates d(objective)/d(params) into grad, given d(objective)/d(output).
  void Backward(const Tape& tape, std::span<const double> grad_output, std::span<double> grad) const;

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }
  std::size_t num_params() const { return params_.size(); }
  const std::vector<DenseShape>& shapes() const { return shapes_; }
  std::size_t input_width() const { return shapes_.front().in; }
  std::size_t output_width() const { return shapes_.back().out; }

  std::span<double> weights(std::size_t layer);
  std::span<const double> weights(std::size_t layer) const;
  std::span<double> bias(std::size_t layer);
  std::span<const double> bias(std::size_t layer) const;

 private:
  std::vector<DenseShape> shapes_;
  std::vector<std::size_t> offsets_;
  std::vector<double> params_;
};

}  // namespace coredse::policy
