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

#include "coredse/accel/design.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "coredse/error.hpp"

namespace coredse::accel {

namespace {

std::string LayerPrefix(std::size_t layer) { return "L" + std::to_string(layer) + "."; }

std::string TileName(std::size_t layer, int level, Dim d) {
  return LayerPrefix(layer) + "tile" + std::to_string(level + 1) + "." + DimName(d);
}

bool IsPermutation(const LoopOrder& order) {
  std::array<bool, kNumDims> seen{};
  for (Dim d : order) {
    const int i = Index(d);
    if (i < 0 || i >= kNumDims || seen[static_cast<std::size_t>(i)]) return false;
    seen[static_cast<std::size_t>(i)] = true;
  }
  return true;
}

space::Ranged ToRanged(const RangeOption& r) { return {r.low, r.up, r.step}; }

}  // namespace

bool DesignConfig::operator==(const DesignConfig& o) const {
  if (n_pe != o.n_pe || l1_bytes != o.l1_bytes || l2_bytes != o.l2_bytes) return false;
  if (layers.size() != o.layers.size()) return false;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (int i = 0; i < kLevels; ++i) {
      const auto& a = layers[l].level[static_cast<std::size_t>(i)];
      const auto& b = o.layers[l].level[static_cast<std::size_t>(i)];
      if (a.loop_order != b.loop_order || a.parallel_dim != b.parallel_dim ||
          a.parallelism != b.parallelism || a.tiles != b.tiles) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::string> CheckDesign(const DesignConfig& design, const Workload& workload) {
  std::vector<std::string> problems;
  if (design.n_pe < 2 || design.n_pe > kMaxPe || design.n_pe % 2 != 0) {
    problems.push_back("n_pe " + std::to_string(design.n_pe) + " is not an even count in [2, 1024]");
  }
  if (design.l1_bytes < 1 || design.l1_bytes > kMaxBufferBytes) {
    problems.push_back("l1_bytes out of [1, 2^32]");
  }
  if (design.l2_bytes < 1 || design.l2_bytes > kMaxBufferBytes) {
    problems.push_back("l2_bytes out of [1, 2^32]");
  }
  if (design.layers.size() != workload.layers.size()) {
    problems.push_back("design maps " + std::to_string(design.layers.size()) + " layers, workload has " +
                       std::to_string(workload.layers.size()));
    return problems;
  }
  for (std::size_t l = 0; l < design.layers.size(); ++l) {
    const auto& shape = workload.layers[l];
    const auto& map = design.layers[l];
    const std::string where = "layer " + std::to_string(l) + ": ";
    for (Dim d : kAllDims) {
      const auto t1 = map.l1().tiles[Index(d)];
      const auto t2 = map.l2().tiles[Index(d)];
      if (t1 < 1) problems.push_back(where + "level-1 tile " + DimName(d) + " < 1");
      if (t1 > t2) problems.push_back(where + "level-1 tile " + DimName(d) + " exceeds level-2 tile");
      if (t2 > shape[d]) problems.push_back(where + "level-2 tile " + DimName(d) + " exceeds layer dim");
    }
    for (int i = 0; i < kLevels; ++i) {
      const auto& lv = map.level[static_cast<std::size_t>(i)];
      const std::string lvl = "level-" + std::to_string(i + 1) + " ";
      if (!IsPermutation(lv.loop_order)) problems.push_back(where + lvl + "loop order is not a permutation");
      if (Index(lv.parallel_dim) < 0 || Index(lv.parallel_dim) >= kNumDims) {
        problems.push_back(where + lvl + "parallel dimension out of range");
        continue;
      }
      if (lv.parallelism < 1) problems.push_back(where + lvl + "parallelism < 1");
    }
    const auto& l1 = map.l1();
    if (Index(l1.parallel_dim) >= 0 && Index(l1.parallel_dim) < kNumDims) {
      const auto bound = std::min(design.n_pe, map.l2().tiles[Index(l1.parallel_dim)]);
      if (l1.parallelism > bound) problems.push_back(where + "level-1 parallelism exceeds min(n_pe, tile)");
    }
    const auto& l2 = map.l2();
    if (Index(l2.parallel_dim) >= 0 && Index(l2.parallel_dim) < kNumDims) {
      if (l2.parallelism > l2.tiles[Index(l2.parallel_dim)]) {
        problems.push_back(where + "level-2 parallelism exceeds its tile");
      }
    }
  }
  return problems;
}

AcceleratorSpace::AcceleratorSpace(Workload workload, SpaceOptions options)
    : workload_(std::move(workload)), options_(options) {
  workload_.Validate();
  if (!IsPermutation(options_.fixed_loop_order)) throw ConfigError("fixed loop order is not a permutation");

  std::vector<space::ParamSpec> params;
  params.push_back({"n_pe", ToRanged(options_.n_pe), {}});
  params.push_back({"l1_bytes", ToRanged(options_.l1_bytes), {}});
  params.push_back({"l2_bytes", ToRanged(options_.l2_bytes), {}});

  for (std::size_t l = 0; l < workload_.layers.size(); ++l) {
    const auto& shape = workload_.layers[l];
    const std::string p = LayerPrefix(l);
    std::vector<std::string> tile2_names;
    for (Dim d : kAllDims) {
      tile2_names.push_back(TileName(l, 1, d));
      params.push_back({tile2_names.back(), space::Ranged{1, shape[d], 1}, {}});
    }
    for (Dim d : kAllDims) {
      params.push_back({TileName(l, 0, d), space::Ranged{1, shape[d], 1},
                        {space::BoundSource::Direct(TileName(l, 1, d))}});
    }
    const auto max_dim = *std::max_element(shape.dims.begin(), shape.dims.end());
    params.push_back({p + "pdim2", space::Categorical{kNumDims}, {}});
    params.push_back({p + "par2", space::Ranged{1, max_dim, 1},
                      {space::BoundSource::Selected(p + "pdim2", tile2_names)}});
    params.push_back({p + "pdim1", space::Categorical{kNumDims}, {}});
    params.push_back({p + "par1", space::Ranged{1, options_.n_pe.up, 1},
                      {space::BoundSource::Direct("n_pe"),
                       space::BoundSource::Selected(p + "pdim1", tile2_names)}});
    if (options_.search_loop_order) {
      params.push_back({p + "order2", space::Permutation{kNumDims}, {}});
      params.push_back({p + "order1", space::Permutation{kNumDims}, {}});
    }
  }
  space_ = space::ParameterSpace(std::move(params));

  auto slot = [&](const std::string& name) { return space_.slot_offset(space_.index_of(name)); };
  n_pe_slot_ = slot("n_pe");
  l1_slot_ = slot("l1_bytes");
  l2_slot_ = slot("l2_bytes");
  layer_slots_.resize(workload_.layers.size());
  for (std::size_t l = 0; l < workload_.layers.size(); ++l) {
    auto& s = layer_slots_[l];
    const std::string p = LayerPrefix(l);
    for (int i = 0; i < kLevels; ++i) {
      const auto lv = static_cast<std::size_t>(i);
      for (Dim d : kAllDims) s.tiles[lv][static_cast<std::size_t>(Index(d))] = slot(TileName(l, i, d));
      s.pdim[lv] = slot(p + "pdim" + std::to_string(i + 1));
      s.par[lv] = slot(p + "par" + std::to_string(i + 1));
      if (options_.search_loop_order) s.order[lv] = slot(p + "order" + std::to_string(i + 1));
    }
  }
}

DesignConfig AcceleratorSpace::ToDesign(const space::Assignment& values) const {
  if (values.size() != space_.total_slots()) {
    throw ShapeError("assignment has " + std::to_string(values.size()) + " slots, space expects " +
                     std::to_string(space_.total_slots()));
  }
  DesignConfig cfg;
  cfg.n_pe = values[n_pe_slot_];
  cfg.l1_bytes = values[l1_slot_];
  cfg.l2_bytes = values[l2_slot_];
  cfg.layers.resize(layer_slots_.size());
  for (std::size_t l = 0; l < layer_slots_.size(); ++l) {
    const auto& s = layer_slots_[l];
    for (std::size_t lv = 0; lv < kLevels; ++lv) {
      auto& m = cfg.layers[l].level[lv];
      for (std::size_t d = 0; d < kNumDims; ++d) m.tiles[d] = values[s.tiles[lv][d]];
      m.parallel_dim = static_cast<Dim>(values[s.pdim[lv]]);
      m.parallelism = values[s.par[lv]];
      if (options_.search_loop_order) {
        for (std::size_t k = 0; k < kNumDims; ++k) {
          m.loop_order[k] = static_cast<Dim>(values[s.order[lv] + k]);
        }
      } else {
        m.loop_order = options_.fixed_loop_order;
      }
    }
  }
  return cfg;
}

DesignConfig AcceleratorSpace::DecodeConfig(const space::CompoundAction& action, space::DecodeMode mode,
                                            space::DecodeDiagnostics* diagnostics) const {
  return ToDesign(space::Decode(action, space_, mode, diagnostics));
}

}  // namespace coredse::accel
