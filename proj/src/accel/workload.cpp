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

#include "coredse/accel/workload.hpp"

#include <fstream>
#include <sstream>

#include "coredse/error.hpp"

namespace coredse::accel {

char DimName(Dim d) {
  static constexpr char kNames[kNumDims] = {'S', 'R', 'K', 'C', 'X', 'Y'};
  return kNames[Index(d)];
}

LoopOrder ParseLoopOrder(std::string_view text) {
  if (text.size() != kNumDims) {
    throw ConfigError("loop order '" + std::string(text) + "' must list all six dimensions");
  }
  LoopOrder order{};
  std::array<bool, kNumDims> seen{};
  for (int i = 0; i < kNumDims; ++i) {
    int found = -1;
    for (Dim d : kAllDims) {
      if (DimName(d) == text[static_cast<std::size_t>(i)]) found = Index(d);
    }
    if (found < 0 || seen[static_cast<std::size_t>(found)]) {
      throw ConfigError("loop order '" + std::string(text) + "' is not a permutation of SRKCXY");
    }
    seen[static_cast<std::size_t>(found)] = true;
    order[static_cast<std::size_t>(i)] = static_cast<Dim>(found);
  }
  return order;
}

std::string FormatLoopOrder(const LoopOrder& order) {
  std::string s;
  for (Dim d : order) s.push_back(DimName(d));
  return s;
}

std::int64_t LayerShape::macs() const {
  std::int64_t m = 1;
  for (auto v : dims) m *= v;
  return m;
}

LayerShape LayerShape::FromKCXYRS(std::int64_t k, std::int64_t c, std::int64_t x, std::int64_t y,
                                  std::int64_t r, std::int64_t s) {
  LayerShape l;
  l.dims[Index(Dim::K)] = k;
  l.dims[Index(Dim::C)] = c;
  l.dims[Index(Dim::X)] = x;
  l.dims[Index(Dim::Y)] = y;
  l.dims[Index(Dim::R)] = r;
  l.dims[Index(Dim::S)] = s;
  return l;
}

void Workload::Validate() const {
  if (layers.empty()) throw ConfigError("workload '" + name + "' has no layers");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    for (Dim d : kAllDims) {
      if (l[d] < 1) {
        throw ConfigError("workload '" + name + "' layer " + std::to_string(i) + ": dimension " +
                          DimName(d) + " must be >= 1");
      }
    }
    if (l[Dim::R] > l[Dim::X] || l[Dim::S] > l[Dim::Y]) {
      throw ConfigError("workload '" + name + "' layer " + std::to_string(i) +
                        ": filter larger than input (need R <= X and S <= Y)");
    }
  }
}

Workload ParseWorkload(std::string_view text, std::string name) {
  Workload w;
  w.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::int64_t> v;
    std::int64_t x = 0;
    while (fields >> x) v.push_back(x);
    if (!fields.eof()) {
      throw ConfigError("workload '" + w.name + "' line " + std::to_string(line_no) +
                        ": expected integers");
    }
    if (v.empty()) continue;
    if (v.size() != 6) {
      throw ConfigError("workload '" + w.name + "' line " + std::to_string(line_no) +
                        ": expected 6 integers 'K C X Y R S', got " + std::to_string(v.size()));
    }
    w.layers.push_back(LayerShape::FromKCXYRS(v[0], v[1], v[2], v[3], v[4], v[5]));
  }
  w.Validate();
  return w;
}

Workload LoadWorkload(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open workload file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseWorkload(buf.str(), path.stem().string());
}

}  // namespace coredse::accel
