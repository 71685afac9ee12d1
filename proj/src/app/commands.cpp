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

#include "coredse/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "coredse/accel/workload.hpp"
#include "coredse/app/history.hpp"
#include "coredse/baselines/genetic.hpp"
#include "coredse/baselines/random_search.hpp"
#include "coredse/error.hpp"
#include "coredse/simd/kernels.hpp"
#include "coredse/space/decode.hpp"

namespace coredse::app {

namespace {

using nlohmann::json;

constexpr std::size_t kOracleChunk = 4096;

json Nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json Log10OrNull(const std::optional<double>& v) {
  if (!v || !(*v > 0.0)) return nullptr;
  return std::log10(*v);
}

json OutcomeMetrics(const objective::EvalOutcome& o) {
  if (o.anomalous) return {{"anomalous", true}, {"reason", o.reason}};
  json viol = json::object();
  for (const auto& v : o.violations) viol[v.name] = v.residual;
  return {{"latency_cycles", o.metrics.at(accel::kMetricLatency)},
          {"area_um2", o.metrics.at(accel::kMetricAreaUm2)},
          {"violations", viol}};
}

std::string StatusName(train::TrainStatus s) {
  switch (s) {
    case train::TrainStatus::kNoSamples: return "no_samples";
    case train::TrainStatus::kCompleted: return "completed";
    case train::TrainStatus::kTargetReached: return "target_reached";
  }
  return "completed";
}

void WriteJson(const std::filesystem::path& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

RunSpec LoadSpecWithOverrides(const CliOptions& opts) {
  if (!opts.config) throw ConfigError("--config PATH is required");
  RunSpec spec = LoadRunSpec(*opts.config);
  if (opts.seed) {
    spec.seed = *opts.seed;
    spec.train.seed = *opts.seed;
  }
  if (opts.out) spec.out = *opts.out;
  return spec;
}

template <typename Fn>
int Guard(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

void RequireEnumerable(const space::ParameterSpace& sp, std::uint64_t limit) {
  const auto card = space::SpaceCardinality(sp, limit);
  if (card.exceeds_limit) {
    throw Error("oracle refused: the space has " + std::string(card.count > limit ? "more than " : "") +
                std::to_string(card.count > limit ? limit : card.count) + " configurations (limit " +
                std::to_string(limit) + ")");
  }
}

std::vector<std::string> SlotNames(const space::ParameterSpace& sp) {
  std::vector<std::string> names;
  for (std::size_t p = 0; p < sp.size(); ++p) {
    const auto& name = sp.param(p).name;
    const std::size_t n = sp.slot_count(p);
    if (n == 1) {
      names.push_back(name);
    } else {
      for (std::size_t i = 0; i < n; ++i) names.push_back(name + "[" + std::to_string(i) + "]");
    }
  }
  return names;
}

}  // namespace

std::unique_ptr<AccelProblem> MakeProblem(const RunSpec& spec) {
  accel::Workload wl = accel::LoadWorkload(spec.workload);
  const auto mode = spec.method == Method::kCoreNoScaling ? space::DecodeMode::kIndependent
                                                          : space::DecodeMode::kScaled;
  return std::make_unique<AccelProblem>(accel::AcceleratorSpace(std::move(wl), spec.space),
                                        accel::Platform::Named(spec.platform), spec.cost, mode);
}

ExperimentResult RunExperiment(const RunSpec& spec, int workers, std::ostream* history) {
  if (spec.method == Method::kOracle) throw ConfigError("method 'oracle' is run by the oracle verb");
  const auto problem = MakeProblem(spec);
  HistoryWriter writer(history);
  auto on_batch = [&](const train::EpisodeReport& r) { writer.Append(r); };

  ExperimentResult out;
  out.spec = spec;
  out.workers = workers;
  switch (spec.method) {
    case Method::kCore:
    case Method::kCoreNoShaping:
    case Method::kCoreNoScaling: {
      auto cfg = spec.train;
      cfg.seed = spec.seed;
      cfg.workers = workers;
      cfg.reward.shaping = spec.method != Method::kCoreNoShaping;
      train::Trainer trainer(*problem, cfg);
      out.result = trainer.Train(on_batch);
      break;
    }
    case Method::kGa:
      out.result = baselines::RunGenetic(*problem, spec.ga, spec.train.reward, spec.train.sample_budget, spec.seed,
                                         workers, on_batch);
      break;
    case Method::kRandom:
      out.result = baselines::RunRandomSearch(*problem, spec.train.reward, spec.train.sample_budget,
                                              spec.random_batch_size, spec.seed, workers, on_batch);
      break;
    case Method::kOracle:
      break;
  }
  out.result.history.clear();
  out.valid_samples = writer.valid_rows();
  out.feasible_samples = writer.feasible_rows();
  out.samples_to_best = writer.samples_to_best();
  if (out.result.best_feasible) {
    out.best_design = problem->Design(out.result.best_feasible->raw);
  } else if (out.result.best) {
    out.best_design = problem->Design(out.result.best->raw);
  }
  return out;
}

json SummaryJson(const ExperimentResult& r) {
  const auto& res = r.result;
  std::optional<double> best_obj;
  if (res.best_feasible) best_obj = res.best_feasible->objective;
  json j = {{"method", MethodName(r.spec.method)},
            {"seed", r.spec.seed},
            {"workload", r.spec.workload.string()},
            {"platform", r.spec.platform},
            {"objective", r.spec.objective},
            {"status", StatusName(res.status)},
            {"episodes", res.episodes},
            {"evaluations", res.evaluations},
            {"valid_samples", r.valid_samples},
            {"feasible_samples", r.feasible_samples},
            {"best_reward", res.best ? json(res.best->reward) : json(nullptr)},
            {"samples_to_best", r.samples_to_best},
            {"best_objective", Nullable(best_obj)},
            {"log10_best_objective", Log10OrNull(best_obj)},
            {"best_metrics", res.best_feasible ? OutcomeMetrics(res.best_feasible->outcome) : json(nullptr)},
            {"simd", std::string(simd::Name(simd::Active().isa))}};
  return j;
}

OracleResult RunOracle(const RunSpec& spec, std::uint64_t limit, int workers, std::ostream* table) {
  const auto problem = MakeProblem(spec);
  const auto& acc = problem->accel_space();
  const auto& sp = acc.space();
  RequireEnumerable(sp, limit);
  const auto weights = ObjectiveWeights(spec.objective);

  if (table != nullptr) {
    *table << "index";
    for (const auto& n : SlotNames(sp)) *table << ',' << n;
    *table << ",valid,feasible,latency_cycles,area_um2,violation_sum,objective\n";
  }

  OracleResult res;
  std::vector<space::Assignment> chunk;
  chunk.reserve(kOracleChunk);
  auto flush = [&] {
    const auto outcomes = train::EvaluateBatch(
        chunk.size(), [&](std::size_t i) { return problem->EvaluateDesign(acc.ToDesign(chunk[i])); }, workers);
    for (std::size_t i = 0; i < chunk.size(); ++i) {
      const auto& o = outcomes[i];
      std::optional<double> obj;
      if (o.feasible()) obj = objective::ObjectiveValue(o, weights);
      if (!o.anomalous) ++res.valid;
      if (obj) {
        ++res.feasible;
        if (!res.best_objective || *obj < *res.best_objective) {
          res.best_objective = obj;
          res.best_design = acc.ToDesign(chunk[i]);
          res.best_outcome = o;
        }
      }
      if (table != nullptr) {
        *table << res.evaluated;
        for (auto v : chunk[i]) *table << ',' << v;
        *table << ',' << (o.anomalous ? 0 : 1) << ',' << (obj ? 1 : 0) << ',';
        if (o.anomalous) {
          *table << ",,,";
        } else {
          *table << FormatDouble(o.metrics[accel::kMetricLatency]) << ','
                 << FormatDouble(o.metrics[accel::kMetricAreaUm2]) << ',' << FormatDouble(o.violation_sum())
                 << ',';
        }
        if (obj) *table << FormatDouble(*obj);
        *table << '\n';
      }
      ++res.evaluated;
    }
    chunk.clear();
  };
  space::EnumerateAssignments(sp, [&](const space::Assignment& a) {
    chunk.push_back(a);
    if (chunk.size() == kOracleChunk) flush();
    return true;
  });
  if (!chunk.empty()) flush();
  return res;
}

json OracleSummaryJson(const RunSpec& spec, const OracleResult& r) {
  return {{"method", "oracle"},
          {"seed", spec.seed},
          {"workload", spec.workload.string()},
          {"platform", spec.platform},
          {"objective", spec.objective},
          {"status", r.evaluated == 0 ? "no_samples" : "completed"},
          {"evaluations", r.evaluated},
          {"valid_samples", r.valid},
          {"feasible_samples", r.feasible},
          {"best_objective", Nullable(r.best_objective)},
          {"log10_best_objective", Log10OrNull(r.best_objective)},
          {"best_metrics", r.best_objective ? OutcomeMetrics(r.best_outcome) : json(nullptr)}};
}

int CmdRun(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const RunSpec spec = LoadSpecWithOverrides(opts);
    if (spec.method == Method::kOracle) return CmdOracle(opts, out, err);
    const int workers = ResolveWorkers(opts.workers, spec);
    MakeProblem(spec);  // fail on a bad workload before touching the output directory
    std::filesystem::create_directories(spec.out);
    std::ofstream history(spec.out / "history.csv");
    if (!history) throw Error("cannot write " + (spec.out / "history.csv").string());
    const auto res = RunExperiment(spec, workers, &history);
    history.close();

    const json summary = SummaryJson(res);
    WriteJson(spec.out / "summary.json", summary);
    json best = {{"method", MethodName(spec.method)}, {"seed", spec.seed}};
    best["design"] = res.best_design ? DesignToJson(*res.best_design) : json(nullptr);
    if (res.result.best_feasible) {
      best["source"] = "best_feasible";
      best["metrics"] = OutcomeMetrics(res.result.best_feasible->outcome);
    } else if (res.result.best) {
      best["source"] = "best_reward";
      best["metrics"] = OutcomeMetrics(res.result.best->outcome);
    }
    WriteJson(spec.out / "best_design.json", best);
    WriteJson(spec.out / "config.json", RunSpecToJson(spec));

    out << MethodName(spec.method) << " seed=" << spec.seed << " evaluations=" << res.result.evaluations
        << " best_objective=" << (summary["best_objective"].is_null() ? std::string("none")
                                                                      : FormatDouble(summary["best_objective"].get<double>()))
        << " -> " << spec.out.string() << '\n';
    return 0;
  });
}

int CmdOracle(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const RunSpec spec = LoadSpecWithOverrides(opts);
    const int workers = ResolveWorkers(opts.workers, spec);
    const std::uint64_t limit = opts.limit ? *opts.limit : spec.oracle_limit;
    RequireEnumerable(MakeProblem(spec)->space(), limit);
    std::filesystem::create_directories(spec.out);
    std::ofstream table(spec.out / "oracle_table.csv");
    if (!table) throw Error("cannot write " + (spec.out / "oracle_table.csv").string());
    const auto res = RunOracle(spec, limit, workers, &table);
    table.close();
    WriteJson(spec.out / "summary.json", OracleSummaryJson(spec, res));
    json best = {{"method", "oracle"}, {"source", "oracle"}};
    best["design"] = res.best_design ? DesignToJson(*res.best_design) : json(nullptr);
    if (res.best_objective) best["metrics"] = OutcomeMetrics(res.best_outcome);
    WriteJson(spec.out / "best_design.json", best);
    out << "oracle evaluated=" << res.evaluated << " feasible=" << res.feasible << " best_objective="
        << (res.best_objective ? FormatDouble(*res.best_objective) : std::string("none")) << " -> "
        << spec.out.string() << '\n';
    return 0;
  });
}

int CmdReport(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (opts.inputs.empty()) throw ConfigError("report needs at least one run directory");
    struct Row {
      std::string run, method;
      std::uint64_t seed = 0;
      std::int64_t evaluations = 0;
      std::optional<double> best_objective;
      std::int64_t samples_to_best = 0;
      std::vector<std::pair<std::int64_t, double>> curve;
    };
    std::vector<Row> rows;
    for (const auto& dir : opts.inputs) {
      Row row;
      row.run = dir.string();
      try {
        std::ifstream f(dir / "summary.json");
        if (!f) throw Error("missing summary.json");
        const json s = json::parse(f);
        row.method = s.at("method").get<std::string>();
        row.seed = s.at("seed").get<std::uint64_t>();
        row.evaluations = s.at("evaluations").get<std::int64_t>();
        if (!s.at("best_objective").is_null()) row.best_objective = s.at("best_objective").get<double>();
        if (s.contains("samples_to_best")) row.samples_to_best = s.at("samples_to_best").get<std::int64_t>();
        if (std::filesystem::exists(dir / "history.csv")) {
          const auto hist = ReadHistory(dir / "history.csv");
          if (static_cast<std::int64_t>(hist.size()) != row.evaluations) {
            err << "warning: " << row.run << ": history has " << hist.size() << " rows but summary reports "
                << row.evaluations << " evaluations\n";
          }
          for (std::size_t i = 0; i < hist.size(); ++i) {
            if (i + 1 == hist.size() || hist[i + 1].episode != hist[i].episode) {
              row.curve.emplace_back(static_cast<std::int64_t>(i + 1), hist[i].best_reward);
            }
          }
          if (!hist.empty() && s.contains("best_reward") && !s.at("best_reward").is_null() &&
              hist.back().best_reward != s.at("best_reward").get<double>()) {
            err << "warning: " << row.run << ": best_reward differs between history and summary\n";
          }
        }
      } catch (const std::exception& e) {
        err << "warning: " << row.run << ": " << e.what() << '\n';
        continue;
      }
      rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      if (a.best_objective.has_value() != b.best_objective.has_value()) return a.best_objective.has_value();
      if (a.best_objective && *a.best_objective != *b.best_objective) return *a.best_objective < *b.best_objective;
      return a.run < b.run;
    });

    std::ostringstream table;
    table << "run,method,seed,evaluations,best_objective,log10_best_objective,samples_to_best\n";
    for (const auto& r : rows) {
      table << r.run << ',' << r.method << ',' << r.seed << ',' << r.evaluations << ',';
      if (r.best_objective) {
        table << FormatDouble(*r.best_objective) << ',';
        if (*r.best_objective > 0.0) table << FormatDouble(std::log10(*r.best_objective));
      } else {
        table << ',';
      }
      table << ',' << r.samples_to_best << '\n';
    }
    out << table.str();

    if (opts.out) {
      std::filesystem::create_directories(*opts.out);
      std::ofstream(*opts.out / "report.csv") << table.str();
      std::ofstream curves(*opts.out / "curves.csv");
      curves << "run,method,samples,best_reward\n";
      for (const auto& r : rows) {
        for (const auto& [n, b] : r.curve) curves << r.run << ',' << r.method << ',' << n << ',' << FormatDouble(b) << '\n';
      }
    }
    return rows.empty() ? 1 : 0;
  });
}

int CmdDefaults(std::ostream& out) {
  out << DefaultsJson().dump(2) << '\n';
  return 0;
}

}  // namespace coredse::app
