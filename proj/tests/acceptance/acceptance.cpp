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

// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Thresholds below are fixed; experiment settings come from
// the shipped configs so every number can be reproduced with the CLI.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coredse/accel/cost_model.hpp"
#include "coredse/accel/design.hpp"
#include "coredse/accel/workload.hpp"
#include "coredse/app/commands.hpp"
#include "coredse/app/run_spec.hpp"
#include "coredse/objective/reward.hpp"
#include "coredse/objective/surrogate.hpp"
#include "coredse/policy/distributions.hpp"
#include "coredse/policy/policy.hpp"
#include "coredse/policy/rng.hpp"
#include "coredse/space/decode.hpp"
#include "coredse/train/trainer.hpp"

namespace {

using namespace coredse;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const fs::path kSource = COREDSE_SOURCE_DIR;

// Pinned thresholds.
constexpr int kAc1Actions = 100000;
constexpr double kAc1MaxSeconds = 60.0;
constexpr int kAc2Seeds = 20;
constexpr int kAc2Coordinates = 400;
constexpr double kAc2Step = 1e-4;
constexpr double kAc2MaxRelError = 1e-3;
constexpr double kAc2RelFloor = 1e-6;
constexpr double kAc2MaxSeconds = 120.0;
constexpr std::uint64_t kAc3MaxCardinality = 50000;
constexpr int kAc3Seeds = 10;
constexpr int kAc3MinHits = 8;
constexpr double kAc3Tolerance = 0.05;
constexpr int kAc3MaxEpisodes = 300;
constexpr int kAc3BatchSize = 16;
constexpr double kAc3MaxSeconds = 600.0;
constexpr int kAc4Seeds = 10;
constexpr std::int64_t kAc4Budget = 10000;
constexpr double kAc4AreaBudgetMm2 = 0.2;
constexpr int kAc5Seeds = 10;
constexpr double kAc6Tolerance = 1e-9;
constexpr std::int64_t kAc7Budget = 640;
constexpr int kAc8Mappings = 10000;

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string Fmt(const char* fmt, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, a);
  return buf;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

app::RunSpec Config(const std::string& name) { return app::LoadRunSpec(kSource / "configs" / name); }

space::CompoundAction UniformAction(const space::ParameterSpace& sp, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(policy::kActionEpsilon, 1.0 - policy::kActionEpsilon);
  space::CompoundAction a{std::vector<double>(sp.total_slots()), 0.0};
  for (std::size_t s = 0; s < a.raw.size(); ++s) {
    const auto& h = sp.heads()[s];
    if (h.kind == space::HeadKind::kBeta) {
      // Mix in the extreme ends so the clamp paths are exercised too.
      const auto r = gen() % 16;
      a.raw[s] = r == 0 ? policy::kActionEpsilon : r == 1 ? 1.0 - policy::kActionEpsilon : u(gen);
    } else {
      a.raw[s] = static_cast<double>(gen() % static_cast<std::uint64_t>(h.categories));
    }
  }
  return a;
}

struct MethodStats {
  std::vector<double> best;  // best feasible objective per seed, inf when none
  std::int64_t evaluations = 0;
  std::int64_t valid = 0;
};

MethodStats RunSeeds(app::RunSpec spec, app::Method method, int seeds) {
  MethodStats st;
  spec.method = method;
  for (int s = 0; s < seeds; ++s) {
    spec.seed = static_cast<std::uint64_t>(s);
    const auto r = app::RunExperiment(spec, 1, nullptr);
    const auto& bf = r.result.best_feasible;
    st.best.push_back(bf && bf->objective ? *bf->objective : std::numeric_limits<double>::infinity());
    st.evaluations += r.result.evaluations;
    st.valid += r.valid_samples;
  }
  return st;
}

// AC1: every random action decodes to a design that passes the invariant checks.
Verdict Ac1() {
  const auto t0 = Clock::now();
  const auto wl = accel::LoadWorkload(kSource / "workloads" / "resnet3.txt");
  const accel::AcceleratorSpace as(wl);
  const auto platform = accel::Platform::Edge();
  const accel::CostConstants consts;
  std::mt19937_64 gen(2024);
  int bad = 0;
  int anomalous = 0;
  std::string first;
  for (int i = 0; i < kAc1Actions; ++i) {
    const auto d = as.DecodeConfig(UniformAction(as.space(), gen));
    const auto problems = accel::CheckDesign(d, wl);
    if (!problems.empty()) {
      if (bad++ == 0) first = problems.front();
      continue;
    }
    if (accel::Simulate(d, wl, platform, consts).anomalous) ++anomalous;
  }
  const double secs = Seconds(t0);
  Verdict v;
  v.pass = bad == 0 && anomalous == 0 && secs < kAc1MaxSeconds;
  v.detail = std::to_string(kAc1Actions - bad) + "/" + std::to_string(kAc1Actions) +
             " designs pass invariants, " + std::to_string(anomalous) + " anomalous, " + Fmt("%.1fs", secs);
  if (!first.empty()) v.detail += ", first failure: " + first;
  return v;
}

// AC2: analytic surrogate gradient against central differences.
Verdict Ac2() {
  const auto t0 = Clock::now();
  const auto spec = Config("resnet3_edge.json");
  const auto problem = app::MakeProblem(spec);
  const auto& heads = problem->space().heads();
  const policy::PolicyArch arch{64, {64, 64, 64}};
  double worst = 0.0;
  std::size_t checked = 0;
  for (int seed = 1; seed <= kAc2Seeds; ++seed) {
    policy::Policy p(heads, arch, static_cast<std::uint64_t>(seed));
    const auto snap = p.Forward();
    std::vector<space::CompoundAction> acts;
    for (std::uint64_t k = 0; k < 8; ++k) {
      auto rng = policy::Rng::Stream(static_cast<std::uint64_t>(seed), 0, k);
      acts.push_back(policy::Sample(snap.dists, rng));
    }
    std::mt19937_64 gen(static_cast<std::uint64_t>(seed) * 7919);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<double> adv(acts.size());
    for (auto& a : adv) a = nd(gen);
    // Move away from the snapshot so the ratio and KL terms contribute.
    std::normal_distribution<double> jitter(0.0, 0.02);
    for (auto& w : p.network().params()) w += jitter(gen);
    const objective::SurrogateCoefficients coeffs{1.0, 0.5};
    const auto res = objective::SurrogateObjective(p, snap.dists, acts, adv, coeffs, true);
    auto params = p.network().params();
    std::uniform_int_distribution<std::size_t> pick(0, params.size() - 1);
    for (int c = 0; c < kAc2Coordinates; ++c) {
      const std::size_t i = pick(gen);
      const double keep = params[i];
      params[i] = keep + kAc2Step;
      const double fp = objective::SurrogateObjective(p, snap.dists, acts, adv, coeffs, false).terms.value;
      params[i] = keep - kAc2Step;
      const double fm = objective::SurrogateObjective(p, snap.dists, acts, adv, coeffs, false).terms.value;
      params[i] = keep;
      const double fd = (fp - fm) / (2.0 * kAc2Step);
      const double g = res.gradient[i];
      const double rel = std::abs(g - fd) / std::max({std::abs(g), std::abs(fd), kAc2RelFloor});
      worst = std::max(worst, rel);
      ++checked;
    }
  }
  const double secs = Seconds(t0);
  Verdict v;
  v.pass = worst < kAc2MaxRelError && secs < kAc2MaxSeconds;
  v.detail = "max relative error " + Fmt("%.3g", worst) + " over " + std::to_string(checked) +
             " coordinates, " + std::to_string(kAc2Seeds) + " seeds, " + Fmt("%.1fs", secs);
  return v;
}

// AC3: CORE against the exhaustive optimum on the toy space.
Verdict Ac3() {
  const auto t0 = Clock::now();
  auto spec = Config("toy.json");
  spec.train.batch_size = kAc3BatchSize;
  spec.train.max_episodes = std::min(spec.train.max_episodes, kAc3MaxEpisodes);
  const auto problem = app::MakeProblem(spec);
  const auto card = space::SpaceCardinality(problem->space(), kAc3MaxCardinality);
  Verdict v;
  if (card.exceeds_limit) {
    v.pass = false;
    v.detail = "toy space exceeds the enumerable limit";
    return v;
  }
  const auto oracle = app::RunOracle(spec, kAc3MaxCardinality, 1, nullptr);
  if (!oracle.best_objective) {
    v.pass = false;
    v.detail = "toy space has no feasible design";
    return v;
  }
  const auto core = RunSeeds(spec, app::Method::kCore, kAc3Seeds);
  int hits = 0;
  for (double b : core.best) {
    if (b <= *oracle.best_objective * (1.0 + kAc3Tolerance)) ++hits;
  }
  const double secs = Seconds(t0);
  v.pass = hits >= kAc3MinHits && secs < kAc3MaxSeconds;
  v.detail = "oracle optimum " + Fmt("%g", *oracle.best_objective) + " over " + std::to_string(card.count) +
             " designs; CORE within 5% on " + std::to_string(hits) + "/" + std::to_string(kAc3Seeds) +
             " seeds (median " + Fmt("%g", Median(core.best)) + "), " + Fmt("%.1fs", secs);
  return v;
}

// AC4: CORE against GA and random search under an equal sample budget.
Verdict Ac4() {
  const auto t0 = Clock::now();
  auto spec = Config("resnet3_edge.json");
  Verdict v;
  if (spec.train.sample_budget != kAc4Budget || accel::Platform::Named(spec.platform).area_budget_mm2 !=
                                                     kAc4AreaBudgetMm2) {
    v.pass = false;
    v.detail = "config does not match the pinned budget";
    return v;
  }
  const auto core = RunSeeds(spec, app::Method::kCore, kAc4Seeds);
  const auto ga = RunSeeds(spec, app::Method::kGa, kAc4Seeds);
  const auto rnd = RunSeeds(spec, app::Method::kRandom, kAc4Seeds);
  const std::int64_t expected = kAc4Budget * kAc4Seeds;
  const bool equal_budget = core.evaluations == expected && ga.evaluations == expected && rnd.evaluations == expected;
  const double mc = Median(core.best), mg = Median(ga.best), mr = Median(rnd.best);
  v.pass = equal_budget && mc <= mg && mc <= mr;
  v.detail = "median best latency CORE " + Fmt("%.4g", mc) + ", GA " + Fmt("%.4g", mg) + ", random " +
             Fmt("%.4g", mr) + " cycles; GA/CORE " + Fmt("%.3g", mg / mc) + "x, random/CORE " +
             Fmt("%.3g", mr / mc) + "x" + (equal_budget ? "" : ", unequal sample budgets") + ", " +
             Fmt("%.1fs", Seconds(t0));
  return v;
}

// AC5: ablations on the toy space.
Verdict Ac5() {
  const auto t0 = Clock::now();
  const auto spec = Config("toy.json");
  const auto core = RunSeeds(spec, app::Method::kCore, kAc5Seeds);
  const auto no_rs = RunSeeds(spec, app::Method::kCoreNoShaping, kAc5Seeds);
  const auto no_sc = RunSeeds(spec, app::Method::kCoreNoScaling, kAc5Seeds);
  const double mc = Median(core.best), mrs = Median(no_rs.best), msc = Median(no_sc.best);
  const double core_rate = static_cast<double>(core.valid) / static_cast<double>(core.evaluations);
  const double sc_rate = static_cast<double>(no_sc.valid) / static_cast<double>(no_sc.evaluations);
  Verdict v;
  v.pass = mrs >= mc && msc >= mc && core_rate == 1.0 && sc_rate < 1.0;
  v.detail = "median best objective CORE " + Fmt("%g", mc) + ", no shaping " + Fmt("%g", mrs) +
             ", no scaling " + Fmt("%g", msc) + "; decode feasibility CORE " + Fmt("%.4f", core_rate) +
             ", no scaling " + Fmt("%.4f", sc_rate) + ", " + Fmt("%.1fs", Seconds(t0));
  return v;
}

// AC6: closed-form identities.
Verdict Ac6() {
  int total = 0;
  std::vector<std::string> failed;
  auto near = [&](const std::string& name, double got, double want) {
    ++total;
    if (!(std::abs(got - want) <= kAc6Tolerance)) failed.push_back(name + " got " + Fmt("%.17g", got));
  };
  near("decode_range lower", static_cast<double>(space::DecodeRange(0.0, 2, 1024, 2)), 2);
  near("decode_range middle", static_cast<double>(space::DecodeRange(0.5, 2, 1024, 2)), 514);
  near("decode_range upper", static_cast<double>(space::DecodeRange(1.0, 2, 1024, 2)), 1024);
  const std::vector<std::int64_t> s1{64, 32}, s2{5};
  near("decode_scaled middle", static_cast<double>(space::DecodeScaled(0.5, 1, 1, s1)), 17);
  near("decode_scaled lower", static_cast<double>(space::DecodeScaled(0.0, 1, 1, s2)), 1);
  near("decode_scaled upper", static_cast<double>(space::DecodeScaled(1.0, 1, 1, s2)), 5);
  const std::vector<double> keys{0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  const auto order = space::DecodeOrder(keys);
  near("decode_order", order == std::vector<int>{5, 4, 3, 2, 1, 0} ? 0.0 : 1.0, 0.0);

  objective::RewardConfig rc;
  rc.weights = {-1.0, -1e6};
  objective::EvalOutcome o;
  o.metrics = {100.0, 0.1};
  near("reward weighted sum", objective::ScalarReward(o, rc), -100100.0);
  o.violations = {{"area", 2.0}};
  near("reward violation", objective::ScalarReward(o, rc), -100102.0);
  near("running reward", objective::UpdateRunning(0.0, std::vector<double>{10.0}, 0.2), 2.0);
  near("running reward alpha 1", objective::UpdateRunning(3.0, std::vector<double>{1.0, 2.0}, 1.0), 1.5);
  near("running reward alpha 0", objective::UpdateRunning(3.0, std::vector<double>{1.0, 2.0}, 0.0), 3.0);

  const std::vector<double> r{-3.5, 1.25, 7.0, -0.5};
  const double c = 123.456;
  std::vector<double> shifted = r;
  for (auto& x : shifted) x += c;
  const auto a1 = objective::Advantages(r, 0.75);
  const auto a2 = objective::Advantages(shifted, 0.75 + c);
  for (std::size_t i = 0; i < r.size(); ++i) near("advantage translation", a2[i], a1[i]);

  near("anomalous first episode", objective::AnomalousReward(-5.0, -4.0, -6.0, 1, rc), rc.r_ano);
  near("anomalous later episode", objective::AnomalousReward(-5.0, -4.0, -6.0, 2, rc), 1.0);
  auto rc0 = rc;
  rc0.alpha_p = 0.0;
  near("anomalous without penalty", objective::AnomalousReward(-2.5, -2.5, -9.0, 4, rc0), -2.5);
  near("anomalous fallback", objective::AnomalousReward(-5.0, -4.0, std::nullopt, 3, rc), rc.r_ano);

  near("beta(1,1) entropy", policy::BetaEntropy({1.0, 1.0}), 0.0);
  const auto uniform = policy::CategoricalFromLogits(std::vector<double>(6, 0.3));
  near("uniform-6 entropy", policy::CategoricalEntropy(uniform), std::log(6.0));
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> ab(0.05, 20.0), lg(-4.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const policy::BetaDist p{ab(gen), ab(gen)}, q{ab(gen), ab(gen)};
    ++total;
    if (policy::BetaKl(p, q) < -kAc6Tolerance) failed.push_back("beta KL negative");
    near("beta KL self", policy::BetaKl(p, p), 0.0);
    std::vector<double> l1(5), l2(5);
    for (auto& x : l1) x = lg(gen);
    for (auto& x : l2) x = lg(gen);
    const auto cp = policy::CategoricalFromLogits(l1), cq = policy::CategoricalFromLogits(l2);
    ++total;
    if (policy::CategoricalKl(cp, cq) < -kAc6Tolerance) failed.push_back("categorical KL negative");
    near("categorical KL self", policy::CategoricalKl(cp, cp), 0.0);
  }
  near("entropy schedule start", train::EntropyCoefficient(0, 2000, 1.0, 0.02), 1.0);
  near("entropy schedule end", train::EntropyCoefficient(1999, 2000, 1.0, 0.02), 0.02);
  near("entropy schedule midpoint", train::EntropyCoefficient(1000, 2001, 1.0, 0.02), 0.51);
  near("entropy schedule single episode", train::EntropyCoefficient(0, 1, 1.0, 0.02), 1.0);

  Verdict v;
  v.pass = failed.empty();
  v.detail = std::to_string(total - static_cast<int>(failed.size())) + "/" + std::to_string(total) +
             " identities hold to 1e-9";
  if (!failed.empty()) v.detail += ", first failure: " + failed.front();
  return v;
}

// AC7: histories do not depend on the worker count.
Verdict Ac7() {
  auto spec = Config("resnet3_edge.json");
  spec.train.sample_budget = kAc7Budget;
  spec.seed = 11;
  int compared = 0;
  std::vector<std::string> differing;
  for (auto method : {app::Method::kCore, app::Method::kGa, app::Method::kRandom}) {
    spec.method = method;
    std::string reference;
    for (int workers : {1, 4, 32}) {
      std::ostringstream log;
      app::RunExperiment(spec, workers, &log);
      if (workers == 1) {
        reference = log.str();
      } else {
        ++compared;
        if (log.str() != reference) differing.push_back(app::MethodName(method) + "@" + std::to_string(workers));
      }
    }
  }
  Verdict v;
  v.pass = differing.empty();
  v.detail = std::to_string(compared - static_cast<int>(differing.size())) + "/" + std::to_string(compared) +
             " histories byte-identical to the single-worker run (workers 1, 4, 32; core, ga, random)";
  if (!differing.empty()) v.detail += ", differing: " + differing.front();
  return v;
}

// Brute-force loop nest: a tensor tile is refetched whenever an iteration
// changes the index of any loop at or outside the tensor's innermost relevant loop.
std::int64_t NestFetches(const accel::DimArray& trips, const accel::LoopOrder& order, accel::Tensor tensor) {
  int innermost = -1;
  for (int pos = 0; pos < accel::kNumDims; ++pos) {
    if (accel::IsRelevant(tensor, order[static_cast<std::size_t>(pos)])) innermost = pos;
  }
  std::array<std::int64_t, accel::kNumDims> idx{};
  std::array<std::int64_t, accel::kNumDims> last{};
  last.fill(-1);
  std::int64_t fetches = 0;
  while (true) {
    bool changed = false;
    for (int pos = 0; pos <= innermost; ++pos) changed |= idx[static_cast<std::size_t>(pos)] != last[static_cast<std::size_t>(pos)];
    if (changed) ++fetches;
    last = idx;
    int pos = accel::kNumDims - 1;
    for (; pos >= 0; --pos) {
      auto& i = idx[static_cast<std::size_t>(pos)];
      if (++i < trips[accel::Index(order[static_cast<std::size_t>(pos)])]) break;
      i = 0;
    }
    if (pos < 0) break;
  }
  return fetches;
}

// AC8: cost-model invariants over random mappings.
Verdict Ac8() {
  const accel::CostConstants consts;
  std::mt19937_64 gen(88);
  auto pick = [&](std::int64_t hi) { return 1 + static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(hi)); };
  int traffic_bad = 0, latency_bad = 0, area_bad = 0, refetch_bad = 0;
  for (int i = 0; i < kAc8Mappings; ++i) {
    const auto shape = accel::LayerShape::FromKCXYRS(pick(64), pick(64), pick(30) + 2, pick(30) + 2, pick(3), pick(3));
    accel::LayerMapping m;
    for (int d = 0; d < accel::kNumDims; ++d) {
      m.level[1].tiles[static_cast<std::size_t>(d)] = pick(shape.dims[static_cast<std::size_t>(d)]);
      m.level[0].tiles[static_cast<std::size_t>(d)] = pick(m.level[1].tiles[static_cast<std::size_t>(d)]);
    }
    for (auto& lv : m.level) std::shuffle(lv.loop_order.begin(), lv.loop_order.end(), gen);
    const std::int64_t n_pe = 2 * pick(512);
    for (auto& lv : m.level) {
      lv.parallel_dim = static_cast<accel::Dim>(gen() % 6);
      lv.parallelism = pick(std::min(n_pe, m.level[1].tiles[static_cast<std::size_t>(accel::Index(lv.parallel_dim))]));
    }
    const auto lm = accel::LayerLatency(m, shape, n_pe, consts);
    if (lm.latency_cycles < (shape.macs() + n_pe - 1) / n_pe) ++latency_bad;
    const auto dram = accel::Traffic(shape.dims, m.l2().tiles, m.l2().loop_order, consts);
    const auto l2 = accel::Traffic(m.l2().tiles, m.l1().tiles, m.l1().loop_order, consts);
    for (auto t : {accel::Tensor::kWeights, accel::Tensor::kInputs, accel::Tensor::kOutputs}) {
      const auto ti = static_cast<std::size_t>(t);
      if (dram[ti] < consts.bytes_per_element * accel::TensorVolume(t, shape.dims)) ++traffic_bad;
      if (l2[ti] < consts.bytes_per_element * accel::TensorVolume(t, m.l2().tiles)) ++traffic_bad;
    }

    // Refetch rule on a small nest so it can be walked exhaustively.
    accel::DimArray outer{}, tiles{};
    for (int d = 0; d < accel::kNumDims; ++d) {
      outer[static_cast<std::size_t>(d)] = pick(6);
      tiles[static_cast<std::size_t>(d)] = pick(outer[static_cast<std::size_t>(d)]);
    }
    accel::LoopOrder order = accel::kCanonicalOrder;
    std::shuffle(order.begin(), order.end(), gen);
    accel::DimArray trips{};
    for (int d = 0; d < accel::kNumDims; ++d) {
      const auto k = static_cast<std::size_t>(d);
      trips[k] = (outer[k] + tiles[k] - 1) / tiles[k];
    }
    const auto bytes = accel::Traffic(outer, tiles, order, consts);
    for (auto t : {accel::Tensor::kWeights, accel::Tensor::kInputs, accel::Tensor::kOutputs}) {
      const std::int64_t want = consts.bytes_per_element * accel::TensorVolume(t, tiles) * NestFetches(trips, order, t);
      if (bytes[static_cast<std::size_t>(t)] != want) ++refetch_bad;
    }

    const std::int64_t pe = 2 * pick(512), l1b = pick(1 << 16), l2b = pick(1 << 22);
    const double base = accel::AreaMm2(pe, l1b, l2b, consts);
    if (accel::AreaMm2(pe + 2 * pick(8), l1b, l2b, consts) < base) ++area_bad;
    if (accel::AreaMm2(pe, l1b + pick(1024), l2b, consts) < base) ++area_bad;
    if (accel::AreaMm2(pe, l1b, l2b + pick(1 << 16), consts) < base) ++area_bad;
  }
  Verdict v;
  v.pass = traffic_bad == 0 && latency_bad == 0 && area_bad == 0 && refetch_bad == 0;
  v.detail = std::to_string(kAc8Mappings) + " mappings; violations: traffic " + std::to_string(traffic_bad) +
             ", latency bound " + std::to_string(latency_bad) + ", area monotonicity " + std::to_string(area_bad) +
             ", refetch rule " + std::to_string(refetch_bad);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "feasibility by construction", Ac1},
      {"AC2", "surrogate gradient vs finite differences", Ac2},
      {"AC3", "oracle optimality on the toy space", Ac3},
      {"AC4", "baseline dominance on resnet3 edge", Ac4},
      {"AC5", "ablation direction", Ac5},
      {"AC6", "exact algebra", Ac6},
      {"AC7", "determinism across worker counts", Ac7},
      {"AC8", "cost-model invariants", Ac8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << c.id << ' ' << (v.pass ? "PASS" : "FAIL") << ' ' << c.name << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
