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

#include <algorithm>
#include <cmath>
#include <random>

#include "coredse/accel/cost_model.hpp"
#include "coredse/accel/design.hpp"
#include "coredse/accel/workload.hpp"
#include "coredse/error.hpp"

using namespace coredse;
using namespace coredse::accel;

namespace {

LayerMapping SingleTile(const LayerShape& shape) {
  LayerMapping m;
  for (auto& lv : m.level) lv.tiles = shape.dims;
  return m;
}

DimArray Dims(std::int64_t s, std::int64_t r, std::int64_t k, std::int64_t c, std::int64_t x, std::int64_t y) {
  return {s, r, k, c, x, y};
}

}  // namespace

TEST_CASE("workload parsing") {
  const auto wl = ParseWorkload("# comment\n64 3 32 32 3 3\n\n16 64 8 8 1 1  # trailing\n", "w");
  REQUIRE(wl.layers.size() == 2);
  CHECK(wl.layers[0][Dim::K] == 64);
  CHECK(wl.layers[0][Dim::C] == 3);
  CHECK(wl.layers[0][Dim::R] == 3);
  CHECK(wl.layers[1].macs() == 16 * 64 * 8 * 8);
  CHECK_THROWS_AS(ParseWorkload("1 2 3\n", "bad"), ConfigError);
  CHECK_THROWS_AS(ParseWorkload("4 4 2 2 3 1\n", "r>x"), ConfigError);
  CHECK_THROWS_AS(ParseWorkload("0 4 2 2 1 1\n", "zero"), ConfigError);
  try {
    LoadWorkload("/nonexistent/path/w.txt");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/path/w.txt") != std::string::npos);
  }
}

TEST_CASE("loop order text round trip") {
  CHECK(FormatLoopOrder(kCanonicalOrder) == "SRKCXY");
  CHECK(FormatLoopOrder(ParseLoopOrder("YXCKRS")) == "YXCKRS");
  CHECK_THROWS(ParseLoopOrder("SSKCXY"));
}

TEST_CASE("tensor volume examples") {
  const DimArray ones{1, 1, 1, 1, 1, 1};
  for (auto t : {Tensor::kWeights, Tensor::kInputs, Tensor::kOutputs}) CHECK(TensorVolume(t, ones) == 1);
  const DimArray tiles = Dims(3, 3, 4, 2, 8, 8);
  CHECK(TensorVolume(Tensor::kWeights, tiles) == 72);
  CHECK(TensorVolume(Tensor::kInputs, tiles) == 128);
  CHECK(TensorVolume(Tensor::kOutputs, tiles) == 256);
}

TEST_CASE("traffic examples") {
  const CostConstants c;
  const DimArray outer = Dims(3, 3, 4, 2, 8, 8);
  for (const auto& order : {kCanonicalOrder, ParseLoopOrder("YXCKRS")}) {
    const auto t = Traffic(outer, outer, order, c);
    CHECK(t[0] == 2 * 72);
    CHECK(t[1] == 2 * 128);
    CHECK(t[2] == 2 * 256);
  }
  // K split in two, K outermost: weights stream through exactly once.
  const DimArray o2 = Dims(1, 1, 4, 1, 1, 1), t2 = Dims(1, 1, 2, 1, 1, 1);
  const auto k_outer = Traffic(o2, t2, ParseLoopOrder("KSRCXY"), c);
  CHECK(k_outer[0] == 2 * 4);
  // K innermost with an irrelevant X loop (T=3) outside: weights refetched 3x,
  // inputs unaffected by K.
  const DimArray o3 = Dims(1, 1, 4, 1, 3, 1), t3 = Dims(1, 1, 2, 1, 1, 1);
  const auto k_inner = Traffic(o3, t3, ParseLoopOrder("SRCXYK"), c);
  const auto k_first = Traffic(o3, t3, ParseLoopOrder("KSRCXY"), c);
  CHECK(k_inner[0] == 3 * k_first[0]);
  CHECK(k_inner[1] == 2 * 3);
  CHECK_THROWS(Traffic(o2, Dims(1, 1, 8, 1, 1, 1), kCanonicalOrder, c));
}

TEST_CASE("layer latency examples") {
  const CostConstants c;
  const auto unit = LayerShape::FromKCXYRS(1, 1, 1, 1, 1, 1);
  CHECK(LayerLatency(SingleTile(unit), unit, 2, c).latency_cycles >= 1);
  const auto shape = LayerShape::FromKCXYRS(4, 2, 8, 8, 3, 3);
  const auto m = LayerLatency(SingleTile(shape), shape, 2, c);
  CHECK(m.compute_cycles == 4608);
  CHECK(m.latency_cycles == std::max(m.compute_cycles, m.memory_cycles));
  auto faster = SingleTile(shape);
  faster.level[0].parallelism = 2;
  CHECK(LayerLatency(faster, shape, 2, c).latency_cycles <= m.latency_cycles);
}

TEST_CASE("area examples") {
  const CostConstants c;
  CHECK(AreaMm2(100, 1024, 65536, c) == doctest::Approx(0.207936).epsilon(1e-12));
  CHECK(AreaMm2(1, 0, 0, c) == doctest::Approx(4e-4));
  CHECK(AreaMm2(101, 1024, 65536, c) > AreaMm2(100, 1024, 65536, c));
  CHECK(AreaMm2(100, 1025, 65536, c) > AreaMm2(100, 1024, 65536, c));
  CHECK(AreaMm2(100, 1024, 65537, c) > AreaMm2(100, 1024, 65536, c));
}

TEST_CASE("simulate reports normalized violations") {
  const CostConstants c;
  Workload wl{"w", {LayerShape::FromKCXYRS(4, 2, 8, 8, 3, 3)}};
  DesignConfig d;
  d.n_pe = 2;
  d.l1_bytes = 1 << 20;
  d.l2_bytes = 1 << 20;
  d.layers = {SingleTile(wl.layers[0])};
  auto o = Simulate(d, wl, Platform::Cloud(), c);
  REQUIRE_FALSE(o.anomalous);
  CHECK(o.violations.empty());
  CHECK(o.metrics[kMetricAreaUm2] == doctest::Approx(AreaMm2(2, 1 << 20, 1 << 20, c) * 1e6));

  // Area exactly twice the edge budget.
  Platform p{"test", AreaMm2(2, 1 << 20, 1 << 20, c) / 2.0};
  o = Simulate(d, wl, p, c);
  bool found = false;
  for (const auto& v : o.violations) {
    if (v.name == "area") {
      found = true;
      CHECK(v.residual == doctest::Approx(1.0));
    }
  }
  CHECK(found);

  // L1 footprint twice its capacity.
  const std::int64_t fp = 2 * (72 + 128 + 256);
  d.l1_bytes = fp / 2;
  o = Simulate(d, wl, Platform::Cloud(), c);
  found = false;
  for (const auto& v : o.violations) {
    if (v.name == "l1_capacity") {
      found = true;
      CHECK(v.residual == doctest::Approx(1.0));
    }
  }
  CHECK(found);
}

TEST_CASE("malformed designs are anomalous") {
  Workload wl{"w", {LayerShape::FromKCXYRS(4, 2, 8, 8, 3, 3)}};
  DesignConfig d;
  d.n_pe = 2;
  d.l1_bytes = 1024;
  d.l2_bytes = 1024;
  d.layers = {SingleTile(wl.layers[0])};
  d.layers[0].level[0].tiles[Index(Dim::K)] = 5;
  CHECK_FALSE(CheckDesign(d, wl).empty());
  CHECK(Simulate(d, wl, Platform::Edge(), CostConstants{}).anomalous);
  d.layers[0].level[0].tiles[Index(Dim::K)] = 4;
  d.layers[0].level[0].parallelism = 3;  // above n_pe
  CHECK_FALSE(CheckDesign(d, wl).empty());
  d.layers[0].level[0].parallelism = 1;
  d.n_pe = 3;  // odd
  CHECK_FALSE(CheckDesign(d, wl).empty());
}

TEST_CASE("accelerator space: extreme actions decode to minimal and maximal designs") {
  const auto wl = ParseWorkload("8 4 6 6 3 3\n", "w");
  SpaceOptions opt;
  opt.n_pe = {2, 16, 2};
  AcceleratorSpace as(wl, opt);
  const auto& sp = as.space();

  space::CompoundAction zeros{std::vector<double>(sp.total_slots(), 0.0), 0.0};
  const auto lo = as.DecodeConfig(zeros);
  CHECK(lo.n_pe == 2);
  for (const auto& lv : lo.layers[0].level) {
    CHECK(lv.parallelism == 1);
    for (auto t : lv.tiles) CHECK(t == 1);
  }

  space::CompoundAction ones{std::vector<double>(sp.total_slots(), 1.0), 0.0};
  for (std::size_t i = 0; i < sp.total_slots(); ++i) {
    if (sp.heads()[i].kind == space::HeadKind::kCategorical) ones.raw[i] = sp.heads()[i].categories - 1;
  }
  const auto hi = as.DecodeConfig(ones);
  CHECK(hi.n_pe == 16);
  for (const auto& lv : hi.layers[0].level) CHECK(lv.tiles == wl.layers[0].dims);
  const auto& l1 = hi.layers[0].l1();
  CHECK(l1.parallelism == std::min<std::int64_t>(16, hi.layers[0].l2().tiles[Index(l1.parallel_dim)]));
  CHECK(CheckDesign(hi, wl).empty());
}

TEST_CASE("random actions always decode to valid designs; independent decode does not") {
  const auto wl = ParseWorkload("64 64 56 56 3 3\n128 64 28 28 3 3\n", "w");
  AcceleratorSpace as(wl);
  const auto& sp = as.space();
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(1e-6, 1 - 1e-6);
  int independent_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    space::CompoundAction a{std::vector<double>(sp.total_slots()), 0.0};
    for (std::size_t s = 0; s < a.raw.size(); ++s) {
      const auto& h = sp.heads()[s];
      a.raw[s] = h.kind == space::HeadKind::kBeta ? u(gen) : static_cast<double>(gen() % h.categories);
    }
    const auto d = as.DecodeConfig(a);
    const auto problems = CheckDesign(d, wl);
    CHECK_MESSAGE(problems.empty(), (problems.empty() ? std::string() : problems.front()));
    if (!CheckDesign(as.DecodeConfig(a, space::DecodeMode::kIndependent), wl).empty()) ++independent_bad;
  }
  CHECK(independent_bad > 0);
}

TEST_CASE("cost model invariants over random mappings") {
  const CostConstants c;
  std::mt19937_64 gen(17);
  auto pick = [&](std::int64_t hi) { return 1 + static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(hi)); };
  for (int i = 0; i < 2000; ++i) {
    const auto shape = LayerShape::FromKCXYRS(pick(32), pick(32), pick(16) + 2, pick(16) + 2, pick(3), pick(3));
    LayerMapping m;
    for (int d = 0; d < kNumDims; ++d) {
      m.level[1].tiles[d] = pick(shape.dims[d]);
      m.level[0].tiles[d] = pick(m.level[1].tiles[d]);
    }
    std::shuffle(m.level[0].loop_order.begin(), m.level[0].loop_order.end(), gen);
    std::shuffle(m.level[1].loop_order.begin(), m.level[1].loop_order.end(), gen);
    const std::int64_t n_pe = 2 * pick(64);
    m.level[0].parallel_dim = static_cast<Dim>(gen() % 6);
    m.level[0].parallelism = pick(std::min(n_pe, m.level[1].tiles[Index(m.level[0].parallel_dim)]));
    const auto lm = LayerLatency(m, shape, n_pe, c);
    CHECK(lm.latency_cycles >= (shape.macs() + n_pe - 1) / n_pe);
    const auto dram = Traffic(shape.dims, m.level[1].tiles, m.level[1].loop_order, c);
    for (auto t : {Tensor::kWeights, Tensor::kInputs, Tensor::kOutputs}) {
      CHECK(dram[static_cast<int>(t)] >= c.bytes_per_element * TensorVolume(t, shape.dims));
    }
  }
}
