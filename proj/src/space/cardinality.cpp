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

#include <algorithm>
#include <numeric>
#include <vector>

#include "coredse/space/decode.hpp"

namespace coredse::space {

namespace {

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap;
  return std::min(a * b, cap);
}

std::uint64_t SaturatingFactorial(int n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f = SaturatingMul(f, static_cast<std::uint64_t>(k), cap);
  return f;
}

// Number of values a ranged parameter can take given the values decoded so far.
std::int64_t RangedChoices(const ParameterSpace& space, std::size_t i, const Assignment& values) {
  const auto& range = std::get<Ranged>(space.param(i).kind);
  const std::int64_t up = EffectiveUpperBound(space, i, values, DecodeMode::kScaled);
  if (up < range.low) return 1;
  return (up - range.low) / range.step + 1;
}

class Counter {
 public:
  Counter(const ParameterSpace& space, std::uint64_t limit)
      : space_(space), cap_(limit == UINT64_MAX ? UINT64_MAX : limit + 1),
        values_(space.total_slots(), 0) {}

  // Saturates at cap_; every subtree contains at least one assignment.
  std::uint64_t Count(std::size_t pos) {
    const auto& order = space_.decode_order();
    if (pos == order.size()) return 1;
    const std::size_t i = order[pos];
    const ParamSpec& spec = space_.param(i);
    const std::size_t off = space_.slot_offset(i);

    std::uint64_t choices = 0;
    if (const auto* cat = std::get_if<Categorical>(&spec.kind)) {
      choices = static_cast<std::uint64_t>(cat->count);
    } else if (const auto* perm = std::get_if<Permutation>(&spec.kind)) {
      choices = SaturatingFactorial(perm->size, cap_);
    } else {
      choices = static_cast<std::uint64_t>(RangedChoices(space_, i, values_));
    }

    if (!space_.is_source(i)) {
      if (choices >= cap_) return cap_;
      return SaturatingMul(choices, Count(pos + 1), cap_);
    }

    std::uint64_t total = 0;
    const std::int64_t low = std::holds_alternative<Ranged>(spec.kind)
                                 ? std::get<Ranged>(spec.kind).low
                                 : 0;
    const std::int64_t step = std::holds_alternative<Ranged>(spec.kind)
                                  ? std::get<Ranged>(spec.kind).step
                                  : 1;
    for (std::uint64_t c = 0; c < choices; ++c) {
      values_[off] = low + static_cast<std::int64_t>(c) * step;
      total += Count(pos + 1);
      if (total >= cap_) return cap_;
    }
    return total;
  }

  std::uint64_t cap() const { return cap_; }

 private:
  const ParameterSpace& space_;
  std::uint64_t cap_;
  Assignment values_;
};

class Enumerator {
 public:
  Enumerator(const ParameterSpace& space, const std::function<bool(const Assignment&)>& visit)
      : space_(space), visit_(visit), values_(space.total_slots(), 0) {}

  // Returns false once the visitor asks to stop.
  bool Walk(std::size_t pos) {
    const auto& order = space_.decode_order();
    if (pos == order.size()) return visit_(values_);
    const std::size_t i = order[pos];
    const ParamSpec& spec = space_.param(i);
    const std::size_t off = space_.slot_offset(i);

    if (const auto* cat = std::get_if<Categorical>(&spec.kind)) {
      for (int c = 0; c < cat->count; ++c) {
        values_[off] = c;
        if (!Walk(pos + 1)) return false;
      }
    } else if (const auto* perm = std::get_if<Permutation>(&spec.kind)) {
      std::vector<std::int64_t> items(static_cast<std::size_t>(perm->size));
      std::iota(items.begin(), items.end(), 0);
      do {
        std::copy(items.begin(), items.end(), values_.begin() + static_cast<std::ptrdiff_t>(off));
        if (!Walk(pos + 1)) return false;
      } while (std::next_permutation(items.begin(), items.end()));
    } else {
      const auto& range = std::get<Ranged>(spec.kind);
      const std::int64_t n = RangedChoices(space_, i, values_);
      for (std::int64_t c = 0; c < n; ++c) {
        values_[off] = range.low + c * range.step;
        if (!Walk(pos + 1)) return false;
      }
    }
    return true;
  }

 private:
  const ParameterSpace& space_;
  const std::function<bool(const Assignment&)>& visit_;
  Assignment values_;
};

}  // namespace

Cardinality SpaceCardinality(const ParameterSpace& space, std::uint64_t limit) {
  Counter counter(space, limit);
  const std::uint64_t n = counter.Count(0);
  if (n > limit) return {n, true};
  return {n, false};
}

void EnumerateAssignments(const ParameterSpace& space,
                          const std::function<bool(const Assignment&)>& visit) {
  Enumerator(space, visit).Walk(0);
}

}  // namespace coredse::space
