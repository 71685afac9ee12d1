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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coredse/app/commands.hpp"
#include "coredse/error.hpp"
#include "coredse/simd/kernels.hpp"

int main(int argc, char** argv) {
  using coredse::app::CliOptions;
  CLI::App app{"coredse: constraint-aware one-step RL for accelerator design-space exploration"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string config, out;
  std::uint64_t seed = 0, limit = 0;
  int workers = 0;
  std::string simd = "auto";
  std::vector<std::string> inputs;

  app.add_option("--simd", simd, "Kernel set: auto, scalar or avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::vector<CLI::Option*> seed_opts, worker_opts;
  CLI::Option* limit_opt = nullptr;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
    seed_opts.push_back(cmd->add_option("--seed", seed, "Override the configured seed"));
    worker_opts.push_back(cmd->add_option("--workers", workers, "Parallel evaluator calls (default: config, then CORE_DSE_WORKERS, then 1)")
        ->check(CLI::PositiveNumber));
    cmd->add_option("--out", out, "Output directory");
  };

  auto* run = app.add_subcommand("run", "Run one experiment and write history, summary and best design");
  add_common(run);
  auto* oracle = app.add_subcommand("oracle", "Exhaustively evaluate a small space");
  add_common(oracle);
  limit_opt = oracle->add_option("--limit", limit, "Refuse spaces with more configurations than this");
  auto* report = app.add_subcommand("report", "Compare finished runs");
  report->add_option("dirs", inputs, "Run directories")->required();
  report->add_option("--out", out, "Directory for report.csv and curves.csv");
  app.add_subcommand("defaults", "Print the default configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (simd != "auto") coredse::simd::SetActive(coredse::simd::ParseIsa(simd));
  } catch (const coredse::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  auto* cmd = app.get_subcommands().front();
  if (!config.empty()) opts.config = config;
  auto given = [](const std::vector<CLI::Option*>& o) {
    for (auto* x : o) {
      if (x->count() > 0) return true;
    }
    return false;
  };
  if (given(seed_opts)) opts.seed = seed;
  if (given(worker_opts)) opts.workers = workers;
  if (!out.empty()) opts.out = out;
  if (limit_opt->count() > 0) opts.limit = limit;
  for (const auto& d : inputs) opts.inputs.emplace_back(d);

  if (cmd == run) return coredse::app::CmdRun(opts, std::cout, std::cerr);
  if (cmd == oracle) return coredse::app::CmdOracle(opts, std::cout, std::cerr);
  if (cmd == report) return coredse::app::CmdReport(opts, std::cout, std::cerr);
  return coredse::app::CmdDefaults(std::cout);
}
