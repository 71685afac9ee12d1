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
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "coredse/error.hpp"
#include "coredse/space/param_space.hpp"

namespace coredse::space {

namespace {

// Any cycle within the nodes Kahn's algorithm could not emit.
std::string DescribeCycle(const ScalingGraph& graph, const std::vector<char>& emitted) {
  const std::size_t n = graph.nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [from, to] : graph.edges) out[from].push_back(to);

  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> color(n, kWhite);
  std::vector<std::size_t> stack;
  std::string found;

  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    color[u] = kGrey;
    stack.push_back(u);
    for (std::size_t v : out[u]) {
      if (emitted[v]) continue;
      if (color[v] == kGrey) {
        auto it = std::find(stack.begin(), stack.end(), v);
        for (; it != stack.end(); ++it) found += graph.nodes[*it] + " -> ";
        found += graph.nodes[v];
        return true;
      }
      if (color[v] == kWhite && visit(v)) return true;
    }
    stack.pop_back();
    color[u] = kBlack;
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (!emitted[u] && color[u] == kWhite && visit(u)) break;
  }
  return found;
}

}  // namespace

std::vector<std::size_t> TopologicalOrder(const ScalingGraph& graph) {
  const std::size_t n = graph.nodes.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [from, to] : graph.edges) {
    if (from >= n || to >= n) throw ConfigError("scaling graph edge refers to an undeclared node");
    out[from].push_back(to);
    ++indegree[to];
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> emitted(n, 0);
  while (!ready.empty()) {
    const std::size_t u = ready.top();
    ready.pop();
    order.push_back(u);
    emitted[u] = 1;
    for (std::size_t v : out[u]) {
      if (--indegree[v] == 0) ready.push(v);
    }
  }
  if (order.size() != n) {
    throw ConfigError("scaling graph has a cycle: " + DescribeCycle(graph, emitted));
  }
  return order;
}

}  // namespace coredse::space
