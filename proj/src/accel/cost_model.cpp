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

#include "coredse/accel/cost_model.hpp"

#include <algorithm>

#include "coredse/error.hpp"

namespace coredse::accel {

namespace {

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t Footprint(const DimArray& tiles, const CostConstants& consts) {
  std::int64_t bytes = 0;
  for (int t = 0; t < kNumTensors; ++t) bytes += TensorVolume(static_cast<Tensor>(t), tiles);
  return bytes * consts.bytes_per_element;
}

}  // namespace

void CostConstants::Validate() const {
  if (bytes_per_element <= 0 || bw_l2_bytes_per_cycle <= 0 || bw_dram_bytes_per_cycle <= 0 ||
      !(area_per_pe_mm2 > 0.0) || !(area_per_byte_mm2 > 0.0)) {
    throw ConfigError("cost constants must all be positive");
  }
}

Platform Platform::Named(const std::string& name) {
  if (name == "edge") return Edge();
  if (name == "cloud") return Cloud();
  throw ConfigError("unknown platform '" + name + "' (expected edge or cloud)");
}

bool IsRelevant(Tensor tensor, Dim d) {
  switch (tensor) {
    case Tensor::kWeights:
      return d == Dim::K || d == Dim::C || d == Dim::R || d == Dim::S;
    case Tensor::kInputs:
      return d == Dim::C || d == Dim::X || d == Dim::Y;
    case Tensor::kOutputs:
      return d == Dim::K || d == Dim::X || d == Dim::Y;
  }
  return false;
}

std::int64_t TensorVolume(Tensor tensor, const DimArray& tiles) {
  std::int64_t v = 1;
  for (Dim d : kAllDims) {
    if (IsRelevant(tensor, d)) v *= tiles[Index(d)];
  }
  return v;
}

TensorBytes Traffic(const DimArray& outer, const DimArray& tiles, const LoopOrder& order,
                    const CostConstants& consts) {
  DimArray trips{};
  for (Dim d : kAllDims) {
    const auto i = Index(d);
    if (tiles[i] < 1 || tiles[i] > outer[i]) {
      throw Error(std::string("traffic: tile of ") + DimName(d) + " outside [1, outer extent]");
    }
    trips[i] = CeilDiv(outer[i], tiles[i]);
  }
  TensorBytes bytes{};
  for (int t = 0; t < kNumTensors; ++t) {
    const auto tensor = static_cast<Tensor>(t);
    int innermost = -1;
    for (int pos = 0; pos < kNumDims; ++pos) {
      if (IsRelevant(tensor, order[static_cast<std::size_t>(pos)])) innermost = pos;
    }
    std::int64_t fetches = 1;
    for (int pos = 0; pos <= innermost; ++pos) fetches *= trips[Index(order[static_cast<std::size_t>(pos)])];
    bytes[static_cast<std::size_t>(t)] = consts.bytes_per_element * TensorVolume(tensor, tiles) * fetches;
  }
  return bytes;
}

LayerMetrics LayerLatency(const LayerMapping& mapping, const LayerShape& shape, std::int64_t n_pe,
                          const CostConstants& consts) {
  LayerMetrics m;
  const std::int64_t speedup =
      std::max<std::int64_t>(1, std::min(mapping.l1().parallelism * mapping.l2().parallelism, n_pe));
  m.compute_cycles = CeilDiv(shape.macs(), speedup);

  const TensorBytes l2_to_l1 =
      Traffic(mapping.l2().tiles, mapping.l1().tiles, mapping.l1().loop_order, consts);
  const TensorBytes dram_to_l2 = Traffic(shape.dims, mapping.l2().tiles, mapping.l2().loop_order, consts);
  for (int t = 0; t < kNumTensors; ++t) {
    m.traffic_l2_bytes += l2_to_l1[static_cast<std::size_t>(t)];
    m.traffic_dram_bytes += dram_to_l2[static_cast<std::size_t>(t)];
  }
  m.memory_cycles = CeilDiv(m.traffic_l2_bytes, consts.bw_l2_bytes_per_cycle) +
                    CeilDiv(m.traffic_dram_bytes, consts.bw_dram_bytes_per_cycle);
  m.latency_cycles = std::max(m.compute_cycles, m.memory_cycles);
  m.l1_footprint_bytes = Footprint(mapping.l1().tiles, consts);
  m.l2_footprint_bytes = Footprint(mapping.l2().tiles, consts);
  return m;
}

double AreaMm2(std::int64_t n_pe, std::int64_t l1_bytes, std::int64_t l2_bytes,
               const CostConstants& consts) {
  const double buffer_bytes = static_cast<double>(n_pe) * static_cast<double>(l1_bytes) +
                              static_cast<double>(l2_bytes);
  return static_cast<double>(n_pe) * consts.area_per_pe_mm2 + buffer_bytes * consts.area_per_byte_mm2;
}

objective::EvalOutcome Simulate(const DesignConfig& design, const Workload& workload,
                                const Platform& platform, const CostConstants& consts) {
  if (const auto problems = CheckDesign(design, workload); !problems.empty()) {
    return objective::EvalOutcome::Anomalous(problems.front());
  }
  double latency_sum = 0.0;
  std::int64_t worst_l1 = 0;
  std::int64_t worst_l2 = 0;
  for (std::size_t l = 0; l < workload.layers.size(); ++l) {
    const LayerMetrics m = LayerLatency(design.layers[l], workload.layers[l], design.n_pe, consts);
    latency_sum += static_cast<double>(m.latency_cycles);
    worst_l1 = std::max(worst_l1, m.l1_footprint_bytes);
    worst_l2 = std::max(worst_l2, m.l2_footprint_bytes);
  }
  const double area = AreaMm2(design.n_pe, design.l1_bytes, design.l2_bytes, consts);

  objective::EvalOutcome out;
  out.metrics = {latency_sum / static_cast<double>(workload.layers.size()), area * 1e6};
  if (area > platform.area_budget_mm2) {
    out.violations.push_back({"area", (area - platform.area_budget_mm2) / platform.area_budget_mm2});
  }
  if (worst_l1 > design.l1_bytes) {
    out.violations.push_back({"l1_capacity", static_cast<double>(worst_l1 - design.l1_bytes) /
                                                 static_cast<double>(design.l1_bytes)});
  }
  if (worst_l2 > design.l2_bytes) {
    out.violations.push_back({"l2_capacity", static_cast<double>(worst_l2 - design.l2_bytes) /
                                                 static_cast<double>(design.l2_bytes)});
  }
  return out;
}

}  // namespace coredse::accel
