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

#include <filesystem>
#include <span>
#include <vector>

#include "coredse/policy/mlp.hpp"

namespace coredse::policy {

// Weight file layout (all integers and reals little-endian):
//   8 bytes   magic "COREPOL1"
//   u64       number of layers L
//   L x (u64 out, u64 in)
//   for each layer: out*in weights row-major, then out biases (f64)
void SaveWeights(const std::filesystem::path& path, std::span<const DenseShape> shapes,
                 std::span<const double> values);

struct WeightFile {
  std::vector<DenseShape> shapes;
  std::vector<double> values;
};
WeightFile LoadWeights(const std::filesystem::path& path);

void SaveMlp(const std::filesystem::path& path, const Mlp& net);
// Throws ShapeError if the file's layer shapes differ from net's.
void LoadMlp(const std::filesystem::path& path, Mlp& net);

}  // namespace coredse::policy
