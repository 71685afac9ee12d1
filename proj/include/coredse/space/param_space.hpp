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
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace coredse::space {

// A finite set of k unordered choices, sampled from a categorical head.
struct Categorical {
  int count = 2;
};

// The integers {low, low + step, ..., up}, sampled through a Beta head.
struct Ranged {
  std::int64_t low = 0;
  std::int64_t up = 0;
  std::int64_t step = 1;
};

// An ordering of n items, encoded as n Beta-sampled keys sorted descending.
struct Permutation {
  int size = 2;
};

using ParamKind = std::variant<Categorical, Ranged, Permutation>;

// One source of a dynamic upper bound. Either a fixed parameter, or one of
// several parameters picked by the decoded value of a categorical selector.
struct BoundSource {
  std::string param;
  std::string selector;
  std::vector<std::string> options;

  static BoundSource Direct(std::string name) { return {std::move(name), {}, {}}; }
  static BoundSource Selected(std::string selector, std::vector<std::string> options) {
    return {{}, std::move(selector), std::move(options)};
  }
  bool is_selected() const { return !selector.empty(); }
};

struct ParamSpec {
  std::string name;
  ParamKind kind;
  // Decoded source values cap this parameter's upper bound (Ranged only).
  std::vector<BoundSource> scaled_by;
};

enum class HeadKind { kBeta, kCategorical };

// One distribution head of the policy. Beta heads produce one real in (0,1);
// categorical heads produce one index.
struct HeadSpec {
  HeadKind kind = HeadKind::kBeta;
  int categories = 0;

  int output_width() const { return kind == HeadKind::kBeta ? 2 : categories; }
};

// Raw per-head samples plus the total log-probability under the
// distributions they were drawn from. Categorical indices are stored as
// exact integer-valued doubles.
struct CompoundAction {
  std::vector<double> raw;
  double log_prob = 0.0;
};

// Decoded integer value per head slot. Ranged and categorical parameters use
// one slot; a permutation of n items uses n slots listing item indices from
// first (outermost) to last.
using Assignment = std::vector<std::int64_t>;

// Dependency graph over parameter indices; edges run source -> target.
struct ScalingGraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Kahn's algorithm, choosing the earliest-declared ready node at each step.
// Throws ConfigError naming a cycle if the graph is not acyclic.
std::vector<std::size_t> TopologicalOrder(const ScalingGraph& graph);

// Validated, immutable description of a structured design space.
class ParameterSpace {
 public:
  ParameterSpace() = default;
  explicit ParameterSpace(std::vector<ParamSpec> params);

  const std::vector<ParamSpec>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }
  const ParamSpec& param(std::size_t i) const { return params_.at(i); }

  // Throws ConfigError for unknown names.
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  // Head slots: parameter i owns slots [slot_offset(i), slot_offset(i) + slot_count(i)).
  std::size_t slot_offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t slot_count(std::size_t i) const;
  std::size_t total_slots() const { return heads_.size(); }
  const std::vector<HeadSpec>& heads() const { return heads_; }
  // Sum of head output widths, i.e. the policy network's output width.
  std::size_t output_width() const;

  const ScalingGraph& graph() const { return graph_; }
  const std::vector<std::size_t>& decode_order() const { return order_; }

  // Parameters read by some later parameter (as a bound source, selector or option).
  bool is_source(std::size_t i) const { return is_source_.at(i) != 0; }

 private:
  std::vector<ParamSpec> params_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> offsets_;
  std::vector<HeadSpec> heads_;
  ScalingGraph graph_;
  std::vector<std::size_t> order_;
  std::vector<char> is_source_;
};

}  // namespace coredse::space
