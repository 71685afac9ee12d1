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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "coredse/train/trainer.hpp"

namespace coredse::app {

inline constexpr const char* kHistoryHeader =
    "episode,sample_index,reward,valid,violation_sum,running_reward,best_reward";

// Shortest text that parses back to the same double.
std::string FormatDouble(double v);

// Streams one CSV row per evaluated sample. best_reward is the best reward
// seen up to and including that row.
class HistoryWriter {
 public:
  explicit HistoryWriter(std::ostream* out);

  void Append(const train::EpisodeReport& report);

  std::int64_t rows() const { return rows_; }
  std::int64_t valid_rows() const { return valid_; }
  std::int64_t feasible_rows() const { return feasible_; }
  std::optional<double> best_reward() const { return best_; }
  // 1-based row index at which best_reward was first reached.
  std::int64_t samples_to_best() const { return samples_to_best_; }

 private:
  std::ostream* out_;
  std::int64_t rows_ = 0;
  std::int64_t valid_ = 0;
  std::int64_t feasible_ = 0;
  std::optional<double> best_;
  std::int64_t samples_to_best_ = 0;
};

struct HistoryRow {
  int episode = 0;
  int sample_index = 0;
  double reward = 0.0;
  bool valid = false;
  double violation_sum = 0.0;
  double running_reward = 0.0;
  double best_reward = 0.0;
};

// Throws Error with the path and line number on malformed input.
std::vector<HistoryRow> ReadHistory(const std::filesystem::path& path);

}  // namespace coredse::app
