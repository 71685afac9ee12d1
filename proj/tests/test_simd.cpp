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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "coredse/simd/kernels.hpp"

using namespace coredse::simd;

namespace {

[[maybe_unused]] std::vector<double> RandomVector(std::size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(gen);
  return v;
}

// Lengths around the 4- and 16-wide unroll boundaries.
const std::size_t kLengths[] = {0, 1, 3, 4, 5, 7, 8, 15, 16, 17, 31, 64, 100, 1023};

}  // namespace

TEST_CASE("scalar kernels compute the reference results") {
  const std::vector<double> x{1, 2, 3}, y{4, 5, 6};
  CHECK(scalar::Dot(x.data(), y.data(), 3) == 32.0);
  std::vector<double> z = y;
  scalar::Axpy(2.0, x.data(), z.data(), 3);
  CHECK(z == std::vector<double>{6, 9, 12});
  const std::vector<double> w{1, 0, 0, 1, 1, 1}, b{0.5, -1};
  std::vector<double> out(2);
  scalar::Gemv(w.data(), b.data(), std::vector<double>{3, 4, 5}.data(), out.data(), 2, 3);
  CHECK(out == std::vector<double>{3.5, 11.0});
}

TEST_CASE("scalar adam takes an ascent step of size learning_rate on the first step") {
  std::vector<double> p{0.0, 1.0}, g{0.5, -2.0}, m(2, 0.0), v(2, 0.0);
  const AdamStep step{0.1, 0.9, 0.999, 1e-8, 1 - 0.9, 1 - 0.999};
  scalar::Adam(p.data(), g.data(), m.data(), v.data(), 2, step);
  CHECK(p[0] == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(p[1] == doctest::Approx(0.9).epsilon(1e-6));
}

TEST_CASE("name round trip and scalar always supported") {
  CHECK(Supported(Isa::kScalar));
  CHECK(ParseIsa("scalar") == Isa::kScalar);
  CHECK(ParseIsa(Name(Isa::kAvx2)) == Isa::kAvx2);
  CHECK(Kernels(Isa::kScalar).isa == Isa::kScalar);
}

#if defined(COREDSE_HAVE_AVX2)
TEST_CASE("avx2 kernels match the scalar reference") {
  if (!Supported(Isa::kAvx2)) {
    MESSAGE("cpu lacks avx2/fma; skipping");
    return;
  }
  std::mt19937_64 gen(7);
  for (std::size_t n : kLengths) {
    CAPTURE(n);
    const auto x = RandomVector(n, gen), y = RandomVector(n, gen);
    const double ds = scalar::Dot(x.data(), y.data(), n);
    const double dv = avx2::Dot(x.data(), y.data(), n);
    // Different summation order; bound the rounding difference by n ulps of the magnitude sum.
    double mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) mag += std::abs(x[i] * y[i]);
    CHECK(std::abs(ds - dv) <= 1e-15 * (mag + 1.0) * static_cast<double>(n + 1));

    auto ys = y, yv = y;
    scalar::Axpy(0.37, x.data(), ys.data(), n);
    avx2::Axpy(0.37, x.data(), yv.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ys[i] - yv[i]) <= 1e-15 * (std::abs(ys[i]) + 1.0));

    auto g = RandomVector(n, gen);
    auto ps = x, pv = x, ms = y, mv = y, vs = std::vector<double>(n, 0.25), vv = vs;
    const AdamStep step{1e-3, 0.9, 0.999, 1e-8, 1 - 0.9 * 0.9, 1 - 0.999 * 0.999};
    scalar::Adam(ps.data(), g.data(), ms.data(), vs.data(), n, step);
    avx2::Adam(pv.data(), g.data(), mv.data(), vv.data(), n, step);
    CHECK(ps == pv);
    CHECK(ms == mv);
    CHECK(vs == vv);
  }
}

TEST_CASE("avx2 gemv matches scalar gemv on odd shapes") {
  if (!Supported(Isa::kAvx2)) return;
  std::mt19937_64 gen(11);
  for (std::size_t rows : {1, 3, 8, 13}) {
    for (std::size_t cols : {1, 5, 16, 37}) {
      const auto w = RandomVector(rows * cols, gen), b = RandomVector(rows, gen), x = RandomVector(cols, gen);
      std::vector<double> os(rows), ov(rows);
      scalar::Gemv(w.data(), b.data(), x.data(), os.data(), rows, cols);
      avx2::Gemv(w.data(), b.data(), x.data(), ov.data(), rows, cols);
      for (std::size_t r = 0; r < rows; ++r) CHECK(os[r] == doctest::Approx(ov[r]).epsilon(1e-13));
    }
  }
}
#endif

TEST_CASE("SetActive switches the dispatch table") {
  const Isa before = Active().isa;
  SetActive(Isa::kScalar);
  CHECK(Active().isa == Isa::kScalar);
  SetActive(before);
  CHECK(Active().isa == before);
}
