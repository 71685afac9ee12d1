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

#include "coredse/space/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coredse/error.hpp"

namespace coredse::space {

namespace {

std::int64_t DecodeIndex(double b, std::int64_t count) {
  if (!std::isfinite(b)) throw DomainError("decode: action value is not finite");
  const double scaled = std::floor(static_cast<double>(count) * b);
  if (scaled <= 0.0) return 0;
  if (scaled >= static_cast<double>(count - 1)) return count - 1;
  return static_cast<std::int64_t>(scaled);
}

}  // namespace

std::int64_t DecodeRange(double b, std::int64_t low, std::int64_t up, std::int64_t step) {
  if (step < 1) throw ConfigError("decode_range: step must be >= 1");
  if (low > up) throw ConfigError("decode_range: low exceeds up");
  if ((up - low) % step != 0) throw ConfigError("decode_range: (up - low) is not a multiple of step");
  const std::int64_t count = (up - low) / step + 1;
  return low + DecodeIndex(b, count) * step;
}

std::int64_t DecodeScaled(double b, std::int64_t low, std::int64_t step,
                          std::span<const std::int64_t> sources) {
  if (sources.empty()) throw ConfigError("decode_scaled: no bound sources");
  if (step < 1) throw ConfigError("decode_scaled: step must be >= 1");
  const std::int64_t up = *std::min_element(sources.begin(), sources.end());
  if (up < low) {
    throw DegenerateBoundError("decode_scaled: source bound " + std::to_string(up) +
                               " is below the lower bound " + std::to_string(low));
  }
  const std::int64_t count = (up - low) / step + 1;
  return low + DecodeIndex(b, count) * step;
}

std::vector<int> DecodeOrder(std::span<const double> keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] > keys[b]; });
  return order;
}

std::int64_t EffectiveUpperBound(const ParameterSpace& space, std::size_t param,
                                 const Assignment& values, DecodeMode mode) {
  const ParamSpec& spec = space.param(param);
  const auto& range = std::get<Ranged>(spec.kind);
  if (mode == DecodeMode::kIndependent || spec.scaled_by.empty()) return range.up;
  std::int64_t bound = INT64_MAX;
  for (const BoundSource& src : spec.scaled_by) {
    std::size_t source = 0;
    if (src.is_selected()) {
      const std::int64_t pick = values[space.slot_offset(space.index_of(src.selector))];
      source = space.index_of(src.options.at(static_cast<std::size_t>(pick)));
    } else {
      source = space.index_of(src.param);
    }
    bound = std::min(bound, values[space.slot_offset(source)]);
  }
  return bound;
}

Assignment Decode(const CompoundAction& action, const ParameterSpace& space, DecodeMode mode,
                  DecodeDiagnostics* diagnostics) {
  if (action.raw.size() != space.total_slots()) {
    throw ShapeError("decode: action has " + std::to_string(action.raw.size()) +
                     " entries, space expects " + std::to_string(space.total_slots()));
  }
  Assignment values(space.total_slots(), 0);
  for (std::size_t i : space.decode_order()) {
    const ParamSpec& spec = space.param(i);
    const std::size_t off = space.slot_offset(i);
    if (const auto* cat = std::get_if<Categorical>(&spec.kind)) {
      const double raw = action.raw[off];
      if (!std::isfinite(raw)) throw DomainError("decode: categorical index is not finite");
      values[off] = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor(raw)), 0,
                                             cat->count - 1);
    } else if (const auto* perm = std::get_if<Permutation>(&spec.kind)) {
      const auto order =
          DecodeOrder(std::span<const double>(action.raw).subspan(off, perm->size));
      std::copy(order.begin(), order.end(), values.begin() + static_cast<std::ptrdiff_t>(off));
    } else {
      const auto& range = std::get<Ranged>(spec.kind);
      const std::int64_t up = EffectiveUpperBound(space, i, values, mode);
      if (up < range.low) {
        values[off] = range.low;
        if (diagnostics != nullptr) diagnostics->degenerate_bounds.push_back(spec.name);
        continue;
      }
      const std::int64_t count = (up - range.low) / range.step + 1;
      values[off] = range.low + DecodeIndex(action.raw[off], count) * range.step;
    }
  }
  return values;
}

}  // namespace coredse::space
