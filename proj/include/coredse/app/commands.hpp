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
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "coredse/app/accel_problem.hpp"
#include "coredse/app/run_spec.hpp"
#include "coredse/train/trainer.hpp"

namespace coredse::app {

// Builds the evaluator for a run spec: loads the workload and picks the decode
// mode implied by the method.
std::unique_ptr<AccelProblem> MakeProblem(const RunSpec& spec);

struct ExperimentResult {
  RunSpec spec;
  int workers = 1;
  train::TrainResult result;
  std::int64_t valid_samples = 0;
  std::int64_t feasible_samples = 0;
  std::int64_t samples_to_best = 0;
  std::optional<accel::DesignConfig> best_design;  // best feasible, else best reward
};

// Runs core, its ablations, ga or random. History rows go to 'history' when
// it is not null.
ExperimentResult RunExperiment(const RunSpec& spec, int workers, std::ostream* history);

nlohmann::json SummaryJson(const ExperimentResult& r);

struct OracleResult {
  std::uint64_t evaluated = 0;
  std::uint64_t valid = 0;
  std::uint64_t feasible = 0;
  std::optional<double> best_objective;
  std::optional<accel::DesignConfig> best_design;
  objective::EvalOutcome best_outcome;
};

// Exhaustively evaluates every decodable configuration of the run spec's space.
// Throws Error carrying the computed count when it exceeds 'limit'. One table
// row per configuration goes to 'table' when it is not null.
OracleResult RunOracle(const RunSpec& spec, std::uint64_t limit, int workers, std::ostream* table);

nlohmann::json OracleSummaryJson(const RunSpec& spec, const OracleResult& r);

struct CliOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> limit;
  std::vector<std::filesystem::path> inputs;  // report: run directories
};

// Each returns a process exit status: 0 on success, 2 on configuration
// errors, 1 on other failures.
int CmdRun(const CliOptions& opts, std::ostream& out, std::ostream& err);
int CmdOracle(const CliOptions& opts, std::ostream& out, std::ostream& err);
int CmdReport(const CliOptions& opts, std::ostream& out, std::ostream& err);
int CmdDefaults(std::ostream& out);

}  // namespace coredse::app
