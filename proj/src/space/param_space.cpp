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

#include "coredse/space/param_space.hpp"

#include <string>
#include <utility>

#include "coredse/error.hpp"

namespace coredse::space {

namespace {

void ValidateKind(const ParamSpec& p) {
  if (const auto* r = std::get_if<Ranged>(&p.kind)) {
    if (r->step < 1) throw ConfigError("parameter '" + p.name + "': step must be >= 1");
    if (r->low > r->up) throw ConfigError("parameter '" + p.name + "': low exceeds up");
    if ((r->up - r->low) % r->step != 0) {
      throw ConfigError("parameter '" + p.name + "': (up - low) is not a multiple of step");
    }
  } else if (const auto* c = std::get_if<Categorical>(&p.kind)) {
    if (c->count < 2) throw ConfigError("parameter '" + p.name + "': categorical needs k >= 2");
  } else if (const auto* perm = std::get_if<Permutation>(&p.kind)) {
    if (perm->size < 2) throw ConfigError("parameter '" + p.name + "': permutation needs n >= 2");
  }
  if (!p.scaled_by.empty() && !std::holds_alternative<Ranged>(p.kind)) {
    throw ConfigError("parameter '" + p.name + "': only ranged parameters can be scaled");
  }
}

}  // namespace

ParameterSpace::ParameterSpace(std::vector<ParamSpec> params) : params_(std::move(params)) {
  const std::size_t n = params_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ParamSpec& p = params_[i];
    if (p.name.empty()) throw ConfigError("parameter " + std::to_string(i) + " has an empty name");
    if (!index_.emplace(p.name, i).second) {
      throw ConfigError("duplicate parameter name '" + p.name + "'");
    }
    ValidateKind(p);
  }

  graph_.nodes.reserve(n);
  for (const auto& p : params_) graph_.nodes.push_back(p.name);
  is_source_.assign(n, 0);

  auto lookup = [&](const std::string& name, const std::string& target) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw ConfigError("parameter '" + target + "' is scaled by unknown parameter '" + name + "'");
    }
    return it->second;
  };
  auto require_ranged = [&](std::size_t src, const std::string& target) {
    if (!std::holds_alternative<Ranged>(params_[src].kind)) {
      throw ConfigError("parameter '" + target + "': bound source '" + params_[src].name +
                        "' must be a ranged parameter");
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (const BoundSource& src : params_[t].scaled_by) {
      const std::string& target = params_[t].name;
      if (src.is_selected()) {
        const std::size_t sel = lookup(src.selector, target);
        const auto* cat = std::get_if<Categorical>(&params_[sel].kind);
        if (cat == nullptr) {
          throw ConfigError("parameter '" + target + "': selector '" + src.selector +
                            "' must be categorical");
        }
        if (static_cast<std::size_t>(cat->count) != src.options.size()) {
          throw ConfigError("parameter '" + target + "': selector '" + src.selector + "' has " +
                            std::to_string(cat->count) + " categories but " +
                            std::to_string(src.options.size()) + " options");
        }
        graph_.edges.emplace_back(sel, t);
        is_source_[sel] = 1;
        for (const auto& opt : src.options) {
          const std::size_t o = lookup(opt, target);
          require_ranged(o, target);
          graph_.edges.emplace_back(o, t);
          is_source_[o] = 1;
        }
      } else {
        const std::size_t s = lookup(src.param, target);
        require_ranged(s, target);
        graph_.edges.emplace_back(s, t);
        is_source_[s] = 1;
      }
    }
  }
  order_ = TopologicalOrder(graph_);

  offsets_.reserve(n);
  for (const auto& p : params_) {
    offsets_.push_back(heads_.size());
    if (const auto* c = std::get_if<Categorical>(&p.kind)) {
      heads_.push_back({HeadKind::kCategorical, c->count});
    } else if (const auto* perm = std::get_if<Permutation>(&p.kind)) {
      for (int k = 0; k < perm->size; ++k) heads_.push_back({HeadKind::kBeta, 0});
    } else {
      heads_.push_back({HeadKind::kBeta, 0});
    }
  }
}

std::size_t ParameterSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ConfigError("unknown parameter '" + name + "'");
  return it->second;
}

std::size_t ParameterSpace::slot_count(std::size_t i) const {
  const std::size_t end = i + 1 < offsets_.size() ? offsets_[i + 1] : heads_.size();
  return end - offsets_.at(i);
}

std::size_t ParameterSpace::output_width() const {
  std::size_t width = 0;
  for (const auto& h : heads_) width += static_cast<std::size_t>(h.output_width());
  return width;
}

}  // namespace coredse::space
