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

#include <random>
#include <set>

#include "coredse/error.hpp"
#include "coredse/space/decode.hpp"
#include "coredse/space/param_space.hpp"

using namespace coredse;
using namespace coredse::space;

TEST_CASE("decode_range examples") {
  CHECK(DecodeRange(0.0, 2, 1024, 2) == 2);
  CHECK(DecodeRange(0.5, 2, 1024, 2) == 514);
  CHECK(DecodeRange(1.0, 2, 1024, 2) == 1024);
  CHECK(DecodeRange(0.999999, 1, 4, 1) == 4);
}

TEST_CASE("decode_range is monotone and surjective") {
  std::set<std::int64_t> seen;
  std::int64_t prev = 0;
  for (int i = 0; i <= 10000; ++i) {
    const double b = i / 10000.0;
    const auto v = DecodeRange(b, 3, 27, 4);
    CHECK(v >= prev);
    CHECK(v >= 3);
    CHECK(v <= 27);
    CHECK((v - 3) % 4 == 0);
    prev = v;
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("decode_range rejects invalid specs and non-finite input") {
  CHECK_THROWS_AS(DecodeRange(0.5, 5, 4, 1), ConfigError);
  CHECK_THROWS_AS(DecodeRange(0.5, 1, 4, 0), ConfigError);
  CHECK_THROWS_AS(DecodeRange(0.5, 1, 4, 2), ConfigError);
  CHECK_THROWS_AS(DecodeRange(std::nan(""), 1, 4, 1), DomainError);
}

TEST_CASE("decode_scaled examples and identity with decode_range") {
  const std::int64_t s1[] = {64, 32};
  CHECK(DecodeScaled(0.5, 1, 1, s1) == 17);
  const std::int64_t s2[] = {5};
  CHECK(DecodeScaled(0.0, 1, 1, s2) == 1);
  CHECK(DecodeScaled(1.0, 1, 1, s2) == 5);
  const std::int64_t s3[] = {0};
  CHECK_THROWS_AS(DecodeScaled(0.5, 1, 1, s3), DegenerateBoundError);
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 1000; ++i) {
    const double b = u(gen);
    const std::int64_t src[] = {1 + static_cast<std::int64_t>(gen() % 50), 1 + static_cast<std::int64_t>(gen() % 50)};
    CHECK(DecodeScaled(b, 1, 1, src) == DecodeRange(b, 1, std::min(src[0], src[1]), 1));
  }
}

TEST_CASE("decode_order examples") {
  const double equal[] = {0.3, 0.3, 0.3, 0.3, 0.3, 0.3};
  CHECK(DecodeOrder(equal) == std::vector<int>{0, 1, 2, 3, 4, 5});
  const double rising[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  CHECK(DecodeOrder(rising) == std::vector<int>{5, 4, 3, 2, 1, 0});
  const double first[] = {1, 0, 0, 0, 0, 0};
  CHECK(DecodeOrder(first).front() == 0);
}

TEST_CASE("topological order examples") {
  CHECK(TopologicalOrder({{"A", "B", "C"}, {}}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(TopologicalOrder({{"A", "B", "C"}, {{0, 1}, {1, 2}}}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(TopologicalOrder({{"A", "B", "C"}, {{0, 2}, {1, 2}}}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(TopologicalOrder({{"A", "B", "C"}, {{2, 0}}}) == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("a cycle is reported by name") {
  try {
    TopologicalOrder({{"A", "B", "C"}, {{0, 1}, {1, 2}, {2, 0}}});
    FAIL("expected a cycle error");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("A") != std::string::npos);
    CHECK(msg.find("B") != std::string::npos);
    CHECK(msg.find("C") != std::string::npos);
  }
  std::vector<ParamSpec> ps{{"a", Ranged{1, 4, 1}, {BoundSource::Direct("b")}},
                            {"b", Ranged{1, 4, 1}, {BoundSource::Direct("a")}}};
  CHECK_THROWS_AS(ParameterSpace{ps}, ConfigError);
}

TEST_CASE("parameter space validation") {
  CHECK_THROWS_AS(ParameterSpace({{"x", Ranged{1, 4, 2}, {}}}), ConfigError);
  CHECK_THROWS_AS(ParameterSpace({{"x", Categorical{1}, {}}}), ConfigError);
  CHECK_THROWS_AS(ParameterSpace({{"x", Ranged{1, 4, 1}, {BoundSource::Direct("missing")}}}), ConfigError);
  CHECK_THROWS_AS(ParameterSpace({{"x", Ranged{1, 4, 1}, {}}, {"x", Ranged{1, 4, 1}, {}}}), ConfigError);
  ParameterSpace sp({{"c", Categorical{3}, {}}, {"r", Ranged{1, 4, 1}, {}}, {"p", Permutation{4}, {}}});
  CHECK(sp.total_slots() == 6);
  CHECK(sp.output_width() == 3 + 2 + 4 * 2);
  CHECK(sp.slot_offset(2) == 2);
  CHECK(sp.slot_count(2) == 4);
  CHECK(sp.heads()[0].kind == HeadKind::kCategorical);
  CHECK_THROWS_AS(sp.index_of("nope"), ConfigError);
}

TEST_CASE("decode honours scaling edges and reports shape errors") {
  ParameterSpace sp({{"tile1", Ranged{1, 16, 1}, {BoundSource::Direct("tile2")}}, {"tile2", Ranged{1, 16, 1}, {}}});
  CHECK(sp.decode_order() == std::vector<std::size_t>{1, 0});
  CompoundAction a{{1.0, 0.2}, 0.0};
  const auto v = Decode(a, sp);
  CHECK(v[1] == DecodeRange(0.2, 1, 16, 1));
  CHECK(v[0] == v[1]);
  const auto ind = Decode(a, sp, DecodeMode::kIndependent);
  CHECK(ind[0] == 16);
  CHECK_THROWS_AS(Decode(CompoundAction{{0.5}, 0.0}, sp), ShapeError);
}

TEST_CASE("selected bound sources pick the option named by the selector") {
  ParameterSpace sp({{"a", Ranged{1, 8, 1}, {}},
                     {"b", Ranged{1, 8, 1}, {}},
                     {"which", Categorical{2}, {}},
                     {"par", Ranged{1, 8, 1}, {BoundSource::Selected("which", {"a", "b"})}}});
  CompoundAction act{{0.0, 1.0, 1.0, 1.0}, 0.0};
  auto v = Decode(act, sp);
  CHECK(v[0] == 1);
  CHECK(v[1] == 8);
  CHECK(v[3] == 8);
  act.raw[2] = 0.0;
  v = Decode(act, sp);
  CHECK(v[3] == 1);
}

TEST_CASE("degenerate scaled bound clamps to low and records a warning") {
  ParameterSpace sp({{"src", Ranged{1, 4, 1}, {}}, {"dst", Ranged{3, 9, 1}, {BoundSource::Direct("src")}}});
  DecodeDiagnostics diag;
  const auto v = Decode(CompoundAction{{0.0, 0.7}, 0.0}, sp, DecodeMode::kScaled, &diag);
  CHECK(v[1] == 3);
  REQUIRE(diag.degenerate_bounds.size() == 1);
  CHECK(diag.degenerate_bounds[0] == "dst");
}

TEST_CASE("space cardinality examples") {
  CHECK(SpaceCardinality(ParameterSpace({{"x", Ranged{1, 4, 1}, {}}})).count == 4);
  ParameterSpace chain({{"a", Ranged{1, 3, 1}, {}}, {"b", Ranged{1, 3, 1}, {BoundSource::Direct("a")}}});
  CHECK(SpaceCardinality(chain).count == 6);
  CHECK(SpaceCardinality(ParameterSpace(std::vector<ParamSpec>{})).count == 1);
  CHECK(SpaceCardinality(ParameterSpace({{"p", Permutation{4}, {}}})).count == 24);
  const auto capped = SpaceCardinality(chain, 5);
  CHECK(capped.exceeds_limit);
  CHECK(SpaceCardinality(chain, 0).exceeds_limit);
}

TEST_CASE("enumeration visits exactly the counted assignments, each decodable") {
  ParameterSpace sp({{"n", Ranged{2, 8, 2}, {}},
                     {"t2", Ranged{1, 6, 1}, {}},
                     {"t1", Ranged{1, 6, 1}, {BoundSource::Direct("t2")}},
                     {"sel", Categorical{2}, {}},
                     {"par", Ranged{1, 8, 1}, {BoundSource::Direct("n"), BoundSource::Selected("sel", {"t1", "t2"})}}});
  std::set<Assignment> seen;
  EnumerateAssignments(sp, [&](const Assignment& a) {
    CHECK(a[2] <= a[1]);
    CHECK(a[4] <= a[0]);
    CHECK(a[4] <= (a[3] == 0 ? a[2] : a[1]));
    seen.insert(a);
    return true;
  });
  CHECK(seen.size() == SpaceCardinality(sp).count);

  // Every random decode lands inside the enumerated set.
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 2000; ++i) {
    CompoundAction a{{u(gen), u(gen), u(gen), static_cast<double>(gen() % 2), u(gen)}, 0.0};
    CHECK(seen.count(Decode(a, sp)) == 1);
  }
}
