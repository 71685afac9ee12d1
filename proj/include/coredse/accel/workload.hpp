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

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace coredse::accel {

// The six loop dimensions of a convolution, in canonical order.
// K: output channels, C: input channels, X/Y: input width/height,
// R/S: filter height/width.
enum class Dim : int { S = 0, R = 1, K = 2, C = 3, X = 4, Y = 5 };

inline constexpr int kNumDims = 6;
inline constexpr std::array<Dim, kNumDims> kAllDims{Dim::S, Dim::R, Dim::K,
                                                     Dim::C, Dim::X, Dim::Y};

using DimArray = std::array<std::int64_t, kNumDims>;
using LoopOrder = std::array<Dim, kNumDims>;  // outermost first

inline constexpr int Index(Dim d) { return static_cast<int>(d); }
char DimName(Dim d);
// Parses e.g. "SRKCXY"; throws ConfigError unless it is a permutation of the six letters.
LoopOrder ParseLoopOrder(std::string_view text);
std::string FormatLoopOrder(const LoopOrder& order);
inline constexpr LoopOrder kCanonicalOrder = kAllDims;

struct LayerShape {
  DimArray dims{1, 1, 1, 1, 1, 1};

  std::int64_t operator[](Dim d) const { return dims[Index(d)]; }
  std::int64_t macs() const;
  static LayerShape FromKCXYRS(std::int64_t k, std::int64_t c, std::int64_t x, std::int64_t y,
                               std::int64_t r, std::int64_t s);
};

struct Workload {
  std::string name;
  std::vector<LayerShape> layers;

  // Throws ConfigError unless every dim >= 1, R <= X and S <= Y.
  void Validate() const;
};

// One layer per line as "K C X Y R S"; '#' starts a comment.
Workload ParseWorkload(std::string_view text, std::string name);
Workload LoadWorkload(const std::filesystem::path& path);

}  // namespace coredse::accel
