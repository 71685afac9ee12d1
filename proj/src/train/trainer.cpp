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

#include "coredse/train/trainer.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

#include "coredse/error.hpp"
#include "coredse/objective/surrogate.hpp"
#include "coredse/policy/checkpoint.hpp"
#include "coredse/policy/rng.hpp"
#include "coredse/simd/kernels.hpp"

namespace coredse::train {

namespace {

using nlohmann::json;

constexpr int kStateVersion = 1;

json OutcomeToJson(const objective::EvalOutcome& o) {
  json v = json::array();
  for (const auto& x : o.violations) v.push_back({{"name", x.name}, {"residual", x.residual}});
  return {{"anomalous", o.anomalous}, {"reason", o.reason}, {"metrics", o.metrics}, {"violations", v}};
}

objective::EvalOutcome OutcomeFromJson(const json& j) {
  objective::EvalOutcome o;
  o.anomalous = j.at("anomalous").get<bool>();
  o.reason = j.at("reason").get<std::string>();
  o.metrics = j.at("metrics").get<std::vector<double>>();
  for (const auto& x : j.at("violations")) {
    o.violations.push_back({x.at("name").get<std::string>(), x.at("residual").get<double>()});
  }
  return o;
}

json BestToJson(const std::optional<BestRecord>& b) {
  if (!b) return nullptr;
  return {{"raw", b->raw},
          {"reward", b->reward},
          {"objective", b->objective ? json(*b->objective) : json(nullptr)},
          {"outcome", OutcomeToJson(b->outcome)},
          {"episode", b->episode},
          {"sample", b->sample}};
}

std::optional<BestRecord> BestFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  BestRecord b;
  b.raw = j.at("raw").get<std::vector<double>>();
  b.reward = j.at("reward").get<double>();
  if (!j.at("objective").is_null()) b.objective = j.at("objective").get<double>();
  b.outcome = OutcomeFromJson(j.at("outcome"));
  b.episode = j.at("episode").get<int>();
  b.sample = j.at("sample").get<int>();
  return b;
}

std::vector<double> LoadVector(const std::filesystem::path& path, std::size_t expected) {
  auto file = policy::LoadWeights(path);
  if (file.values.size() != expected) {
    throw ShapeError(path.string() + ": expected " + std::to_string(expected) + " values, found " +
                     std::to_string(file.values.size()));
  }
  return std::move(file.values);
}

}  // namespace

void TrainConfig::Validate() const {
  if (batch_size < 1) throw ConfigError("train.batch_size must be >= 1");
  if (max_episodes < 0) throw ConfigError("train.max_episodes must be >= 0");
  if (sample_budget < 0) throw ConfigError("train.sample_budget must be >= 0");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (std::isnan(target_reward)) throw ConfigError("train.target_reward must not be NaN");
  if (arch.input_width == 0) throw ConfigError("policy.input_width must be >= 1");
  for (std::size_t w : arch.hidden_widths) {
    if (w == 0) throw ConfigError("policy.hidden_widths entries must be >= 1");
  }
  adam.Validate();
  reward.Validate();
}

int TrainConfig::EpisodesToRun() const {
  const std::int64_t by_budget = sample_budget / batch_size;
  return static_cast<int>(std::min<std::int64_t>(max_episodes, by_budget));
}

double EntropyCoefficient(int t, int t_max, double start, double end) {
  if (t_max <= 1) return start;
  return start + (end - start) * static_cast<double>(t) / static_cast<double>(t_max - 1);
}

std::uint64_t ActionHash(std::span<const double> raw) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double x : raw) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

Trainer::Trainer(const Problem& problem, TrainConfig cfg)
    : problem_(problem),
      cfg_((cfg.Validate(), std::move(cfg))),
      policy_(problem.space().heads(), cfg_.arch, policy::SplitMix64(cfg_.seed)),
      adam_(policy_.network().num_params(), cfg_.adam),
      shaper_(cfg_.reward) {}

bool Trainer::Done() const { return target_reached_ || episode_ >= cfg_.EpisodesToRun(); }

EpisodeReport Trainer::RunEpisode() {
  if (Done()) throw Error("trainer: no episodes left to run");
  const auto t0 = std::chrono::steady_clock::now();
  const int t = episode_;
  const auto e = static_cast<std::size_t>(cfg_.batch_size);

  EpisodeReport report;
  report.episode = t;
  try {
    const auto eval = policy_.Forward();

    std::vector<space::CompoundAction> actions;
    std::vector<std::vector<double>> raws;
    actions.reserve(e);
    raws.reserve(e);
    for (std::size_t k = 0; k < e; ++k) {
      auto rng = policy::Rng::Stream(cfg_.seed, static_cast<std::uint64_t>(t), k);
      actions.push_back(policy::Sample(eval.dists, rng));
      raws.push_back(actions.back().raw);
    }

    const auto outcomes = EvaluateBatch(problem_, raws, cfg_.workers);
    evaluations_ += static_cast<std::int64_t>(e);
    const auto rewards = shaper_.Shape(outcomes);

    report.samples.resize(e);
    double sum = 0.0;
    for (std::size_t k = 0; k < e; ++k) {
      const auto& o = outcomes[k];
      auto& s = report.samples[k];
      s.action_hash = ActionHash(raws[k]);
      s.reward = rewards[k];
      s.valid = !o.anomalous;
      s.feasible = o.feasible();
      s.violation_sum = o.anomalous ? 0.0 : o.violation_sum();
      if (s.feasible) s.objective = objective::ObjectiveValue(o, cfg_.reward.weights);
      sum += rewards[k];

      if (!best_ || rewards[k] > best_->reward) {
        best_ = BestRecord{raws[k], rewards[k], s.objective, o, t, static_cast<int>(k)};
      }
      if (s.objective && (!best_feasible_ || *s.objective < *best_feasible_->objective)) {
        best_feasible_ = BestRecord{raws[k], rewards[k], s.objective, o, t, static_cast<int>(k)};
      }
    }
    report.batch_mean = sum / static_cast<double>(e);
    report.best_reward = best_->reward;
    if (best_feasible_) report.best_objective = best_feasible_->objective;

    report.running_reward = shaper_.Commit(rewards, outcomes);
    const auto adv = objective::Advantages(rewards, report.running_reward);

    report.entropy_coefficient =
        EntropyCoefficient(t, cfg_.EpisodesToRun(), cfg_.reward.beta_e_start, cfg_.reward.beta_e_end);
    const objective::SurrogateCoefficients coeffs{cfg_.reward.beta_r, report.entropy_coefficient};
    // The snapshot equals the current policy: one step per episode.
    auto terms = objective::SurrogateFromHeads(eval.raw, eval.dists, eval.dists, actions, adv, coeffs, true);
    report.surrogate = terms.value;

    std::vector<double> grad(policy_.network().num_params(), 0.0);
    policy_.Backward(eval, terms.grad_raw, grad);
    const double sq = simd::Active().dot(grad.data(), grad.data(), grad.size());
    if (!std::isfinite(sq)) throw NumericError("non-finite policy gradient");
    report.grad_norm = std::sqrt(sq);
    adam_.Step(policy_.network().params(), grad);
  } catch (const NumericError& err) {
    throw NumericError("episode " + std::to_string(t) + ": " + err.what());
  }

  ++episode_;
  if (report.best_reward > cfg_.target_reward) target_reached_ = true;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

TrainResult Trainer::Result() const {
  TrainResult r;
  r.best = best_;
  r.best_feasible = best_feasible_;
  r.evaluations = evaluations_;
  r.episodes = episode_;
  if (episode_ == 0) {
    r.status = TrainStatus::kNoSamples;
  } else {
    r.status = target_reached_ ? TrainStatus::kTargetReached : TrainStatus::kCompleted;
  }
  return r;
}

TrainResult Trainer::Train(const std::function<void(const EpisodeReport&)>& on_episode) {
  std::vector<EpisodeReport> history;
  while (!Done()) {
    history.push_back(RunEpisode());
    if (on_episode) on_episode(history.back());
  }
  auto r = Result();
  r.history = std::move(history);
  return r;
}

void Trainer::SaveCheckpoint(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  const auto& net = policy_.network();
  policy::SaveMlp(dir / "policy.bin", net);
  policy::SaveWeights(dir / "adam_m.bin", net.shapes(), adam_.first_moment());
  policy::SaveWeights(dir / "adam_v.bin", net.shapes(), adam_.second_moment());

  const auto& st = shaper_.state();
  json j = {{"version", kStateVersion},
            {"seed", cfg_.seed},
            {"batch_size", cfg_.batch_size},
            {"episode", episode_},
            {"evaluations", evaluations_},
            {"target_reached", target_reached_},
            {"adam_steps", adam_.steps()},
            {"shaper_episode", st.episode},
            {"running_reward", st.running},
            {"prev_valid_mean", st.prev_valid_mean ? json(*st.prev_valid_mean) : json(nullptr)},
            {"best", BestToJson(best_)},
            {"best_feasible", BestToJson(best_feasible_)}};
  std::ofstream out(dir / "state.json");
  if (!out) throw Error("cannot write " + (dir / "state.json").string());
  out << j.dump(2) << '\n';
}

void Trainer::LoadCheckpoint(const std::filesystem::path& dir) {
  const auto state_path = dir / "state.json";
  std::ifstream in(state_path);
  if (!in) throw Error("cannot read " + state_path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(state_path.string() + ": " + e.what());
  }
  if (j.at("version").get<int>() != kStateVersion) throw Error(state_path.string() + ": unsupported version");
  if (j.at("seed").get<std::uint64_t>() != cfg_.seed || j.at("batch_size").get<int>() != cfg_.batch_size) {
    throw ConfigError(state_path.string() + ": checkpoint was written with a different seed or batch size");
  }

  auto& net = policy_.network();
  policy::LoadMlp(dir / "policy.bin", net);
  auto m = LoadVector(dir / "adam_m.bin", net.num_params());
  auto v = LoadVector(dir / "adam_v.bin", net.num_params());
  adam_.Restore(j.at("adam_steps").get<std::int64_t>(), std::move(m), std::move(v));

  objective::RewardShaper::State st;
  st.episode = j.at("shaper_episode").get<int>();
  st.running = j.at("running_reward").get<double>();
  if (!j.at("prev_valid_mean").is_null()) st.prev_valid_mean = j.at("prev_valid_mean").get<double>();
  shaper_.Restore(st);

  episode_ = j.at("episode").get<int>();
  evaluations_ = j.at("evaluations").get<std::int64_t>();
  target_reached_ = j.at("target_reached").get<bool>();
  best_ = BestFromJson(j.at("best"));
  best_feasible_ = BestFromJson(j.at("best_feasible"));
}

}  // namespace coredse::train
