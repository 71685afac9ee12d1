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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coredse/space/param_space.hpp"

namespace coredse::space {

// Maps b in [0,1] onto {low, low+step, ..., up}. The index floor(count*b) is
// clamped to count-1 so b = 1 stays in range.
std::int64_t DecodeRange(double b, std::int64_t low, std::int64_t up, std::int64_t step);

// DecodeRange with the upper bound replaced by the smallest source value.
// Throws DegenerateBoundError when min(sources) < low.
std::int64_t DecodeScaled(double b, std::int64_t low, std::int64_t step,
                          std::span<const std::int64_t> sources);

// Items sorted by key descending (first = outermost); ties keep index order.
std::vector<int> DecodeOrder(std::span<const double> keys);

enum class DecodeMode {
  kScaled,       // honour scaling-graph edges
  kIndependent,  // ignore edges, decode every parameter over its static range
};

struct DecodeDiagnostics {
  // Parameters whose scaled bound collapsed below their lower bound.
  std::vector<std::string> degenerate_bounds;
};

// Decodes one compound action into per-slot values, visiting parameters in
// topological order. Throws ShapeError if the action width does not match.
Assignment Decode(const CompoundAction& action, const ParameterSpace& space,
                  DecodeMode mode = DecodeMode::kScaled, DecodeDiagnostics* diagnostics = nullptr);

// Upper bound of a ranged parameter given the values decoded so far. Returns
// the static bound for unscaled parameters or in independent mode.
std::int64_t EffectiveUpperBound(const ParameterSpace& space, std::size_t param,
                                 const Assignment& values, DecodeMode mode);

struct Cardinality {
  std::uint64_t count = 0;
  bool exceeds_limit = false;
};

// Number of distinct assignments reachable by Decode in scaled mode. Counting
// stops as soon as the total passes limit.
Cardinality SpaceCardinality(const ParameterSpace& space,
                             std::uint64_t limit = UINT64_MAX - 1);

// Calls visit(assignment) once for every assignment counted above, in
// lexicographic order of the decode sequence. visit returns false to stop.
void EnumerateAssignments(const ParameterSpace& space,
                          const std::function<bool(const Assignment&)>& visit);

}  // namespace coredse::space
