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
#include <random>

namespace coredse::policy {

// Seedable random source. Variates are derived from raw 64-bit engine output
// with fixed formulas, so a seed reproduces the same stream on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, a, b), e.g. (run seed, episode, batch slot).
  static Rng Stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

  std::uint64_t Next() { return engine_(); }
  double Uniform();  // [0, 1)
  double Normal();   // N(0, 1)
  // Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 uses the U^(1/shape) boost.
  double Gamma(double shape);
  double Beta(double alpha, double beta);
  std::uint64_t Below(std::uint64_t n);  // uniform in [0, n)

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

}  // namespace coredse::policy
