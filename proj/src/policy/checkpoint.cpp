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

#include "coredse/policy/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "coredse/error.hpp"

namespace coredse::policy {

namespace {

constexpr char kMagic[8] = {'C', 'O', 'R', 'E', 'P', 'O', 'L', '1'};

void PutU64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t GetU64(std::istream& in, const std::string& where) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw ConfigError("truncated weight file '" + where + "'");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

}  // namespace

void SaveWeights(const std::filesystem::path& path, std::span<const DenseShape> shapes,
                 std::span<const double> values) {
  std::size_t expected = 0;
  for (const auto& s : shapes) expected += s.param_count();
  if (expected != values.size()) throw ShapeError("weight file: values do not match layer shapes");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write weight file '" + path.string() + "'");
  out.write(kMagic, sizeof(kMagic));
  PutU64(out, shapes.size());
  for (const auto& s : shapes) {
    PutU64(out, s.out);
    PutU64(out, s.in);
  }
  for (double v : values) PutU64(out, std::bit_cast<std::uint64_t>(v));
  if (!out) throw ConfigError("failed writing weight file '" + path.string() + "'");
}

WeightFile LoadWeights(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open weight file '" + path.string() + "'");
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) {
    throw ConfigError("'" + path.string() + "' is not a COREPOL1 weight file");
  }
  WeightFile f;
  const std::uint64_t layers = GetU64(in, path.string());
  std::size_t total = 0;
  for (std::uint64_t l = 0; l < layers; ++l) {
    DenseShape s;
    s.out = GetU64(in, path.string());
    s.in = GetU64(in, path.string());
    total += s.param_count();
    f.shapes.push_back(s);
  }
  f.values.resize(total);
  for (double& v : f.values) v = std::bit_cast<double>(GetU64(in, path.string()));
  return f;
}

void SaveMlp(const std::filesystem::path& path, const Mlp& net) {
  SaveWeights(path, net.shapes(), net.params());
}

void LoadMlp(const std::filesystem::path& path, Mlp& net) {
  WeightFile f = LoadWeights(path);
  if (f.shapes != net.shapes()) throw ShapeError("weight file '" + path.string() + "' has different layer shapes");
  std::copy(f.values.begin(), f.values.end(), net.params().begin());
}

}  // namespace coredse::policy
