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

#include "coredse/accel/design.hpp"
#include "coredse/accel/workload.hpp"
#include "coredse/objective/outcome.hpp"

// Analytical latency/area model for a 2-level spatial accelerator. This is a
// self-contained stand-in for a dataflow cost model: classical tiled traffic
// with loop-order dependent refetch, double-buffered compute/memory overlap,
// and a linear area model.

namespace coredse::accel {

struct CostConstants {
  std::int64_t bytes_per_element = 2;
  std::int64_t bw_l2_bytes_per_cycle = 64;
  std::int64_t bw_dram_bytes_per_cycle = 16;
  double area_per_pe_mm2 = 4e-4;
  double area_per_byte_mm2 = 1e-6;

  void Validate() const;
};

struct Platform {
  std::string name;
  double area_budget_mm2 = 0.0;

  static Platform Edge() { return {"edge", 0.2}; }
  static Platform Cloud() { return {"cloud", 7.0}; }
  // "edge" or "cloud"; throws ConfigError otherwise.
  static Platform Named(const std::string& name);
};

enum class Tensor { kWeights = 0, kInputs = 1, kOutputs = 2 };
inline constexpr int kNumTensors = 3;
using TensorBytes = std::array<std::int64_t, kNumTensors>;

// Weights: K*C*R*S, Inputs: C*X*Y, Outputs: K*X*Y (output spatial extent is
// approximated by the input tile).
std::int64_t TensorVolume(Tensor tensor, const DimArray& tiles);
bool IsRelevant(Tensor tensor, Dim d);

// Bytes moved into a buffer holding 'tiles' while iterating over 'outer'.
// A tile of tensor t is refetched once per iteration of every loop at or
// outside the innermost loop relevant to t.
TensorBytes Traffic(const DimArray& outer, const DimArray& tiles, const LoopOrder& order,
                    const CostConstants& consts);

struct LayerMetrics {
  std::int64_t latency_cycles = 0;
  std::int64_t compute_cycles = 0;
  std::int64_t memory_cycles = 0;
  std::int64_t l1_footprint_bytes = 0;
  std::int64_t l2_footprint_bytes = 0;
  std::int64_t traffic_dram_bytes = 0;
  std::int64_t traffic_l2_bytes = 0;
};

LayerMetrics LayerLatency(const LayerMapping& mapping, const LayerShape& shape, std::int64_t n_pe,
                          const CostConstants& consts);

double AreaMm2(std::int64_t n_pe, std::int64_t l1_bytes, std::int64_t l2_bytes,
               const CostConstants& consts);

// Metric indices in EvalOutcome::metrics.
inline constexpr std::size_t kMetricLatency = 0;  // mean layer latency, cycles
inline constexpr std::size_t kMetricAreaUm2 = 1;  // area in square micrometres

// Evaluates a design over every layer. Malformed designs come back anomalous;
// area and buffer overflows are reported as normalized residuals
// (value - capacity) / capacity.
objective::EvalOutcome Simulate(const DesignConfig& design, const Workload& workload,
                                const Platform& platform, const CostConstants& consts);

}  // namespace coredse::accel
