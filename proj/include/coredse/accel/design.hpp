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
#include <string>
#include <vector>

#include "coredse/accel/workload.hpp"
#include "coredse/space/decode.hpp"
#include "coredse/space/param_space.hpp"

namespace coredse::accel {

inline constexpr int kLevels = 2;  // 0 -> L1 (per PE), 1 -> L2 (shared)

struct LevelMapping {
  LoopOrder loop_order = kCanonicalOrder;
  Dim parallel_dim = Dim::K;
  std::int64_t parallelism = 1;
  DimArray tiles{1, 1, 1, 1, 1, 1};
};

struct LayerMapping {
  std::array<LevelMapping, kLevels> level;

  const LevelMapping& l1() const { return level[0]; }
  const LevelMapping& l2() const { return level[1]; }
};

// One hardware block shared by every layer, plus a 2-level mapping per layer.
struct DesignConfig {
  std::int64_t n_pe = 2;
  std::int64_t l1_bytes = 1;
  std::int64_t l2_bytes = 1;
  std::vector<LayerMapping> layers;

  bool operator==(const DesignConfig&) const;
};

inline constexpr std::int64_t kMaxPe = 1024;
inline constexpr std::int64_t kMaxBufferBytes = std::int64_t{1} << 32;

// Every violated structural invariant, as human-readable text. Empty means the
// design is well formed for the workload.
std::vector<std::string> CheckDesign(const DesignConfig& design, const Workload& workload);

struct RangeOption {
  std::int64_t low;
  std::int64_t up;
  std::int64_t step;
};

struct SpaceOptions {
  RangeOption n_pe{2, kMaxPe, 2};
  RangeOption l1_bytes{1, kMaxBufferBytes, 1};
  RangeOption l2_bytes{1, kMaxBufferBytes, 1};
  // When false, loop orders are not searched and fixed_loop_order is used at
  // both levels of every layer.
  bool search_loop_order = true;
  LoopOrder fixed_loop_order = kCanonicalOrder;
};

// Hardware/mapping co-design space for a workload: parameters, scaling edges
// and the mapping from decoded assignments back to a DesignConfig.
//
// Declared parameters, in order:
//   n_pe, l1_bytes, l2_bytes, then per layer l:
//   L<l>.tile2.<D> (6), L<l>.tile1.<D> (6), L<l>.pdim2, L<l>.par2,
//   L<l>.pdim1, L<l>.par1, L<l>.order2, L<l>.order1
// Scaling edges: tile2.D -> tile1.D; {pdim2, tile2.*} -> par2;
// {n_pe, pdim1, tile2.*} -> par1.
class AcceleratorSpace {
 public:
  AcceleratorSpace(Workload workload, SpaceOptions options = {});

  const space::ParameterSpace& space() const { return space_; }
  const Workload& workload() const { return workload_; }
  const SpaceOptions& options() const { return options_; }

  DesignConfig ToDesign(const space::Assignment& values) const;
  DesignConfig DecodeConfig(const space::CompoundAction& action,
                            space::DecodeMode mode = space::DecodeMode::kScaled,
                            space::DecodeDiagnostics* diagnostics = nullptr) const;

 private:
  struct LayerSlots {
    std::array<std::array<std::size_t, kNumDims>, kLevels> tiles{};
    std::array<std::size_t, kLevels> pdim{};
    std::array<std::size_t, kLevels> par{};
    std::array<std::size_t, kLevels> order{};
  };

  Workload workload_;
  SpaceOptions options_;
  space::ParameterSpace space_;
  std::size_t n_pe_slot_ = 0;
  std::size_t l1_slot_ = 0;
  std::size_t l2_slot_ = 0;
  std::vector<LayerSlots> layer_slots_;
};

}  // namespace coredse::accel
