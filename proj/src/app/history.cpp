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

#include "coredse/app/history.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "coredse/error.hpp"

namespace coredse::app {

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

HistoryWriter::HistoryWriter(std::ostream* out) : out_(out) {
  if (out_ != nullptr) *out_ << kHistoryHeader << '\n';
}

void HistoryWriter::Append(const train::EpisodeReport& report) {
  for (std::size_t k = 0; k < report.samples.size(); ++k) {
    const auto& s = report.samples[k];
    ++rows_;
    if (s.valid) ++valid_;
    if (s.feasible) ++feasible_;
    if (!best_ || s.reward > *best_) {
      best_ = s.reward;
      samples_to_best_ = rows_;
    }
    if (out_ != nullptr) {
      *out_ << report.episode << ',' << k << ',' << FormatDouble(s.reward) << ',' << (s.valid ? 1 : 0) << ','
            << FormatDouble(s.violation_sum) << ',' << FormatDouble(report.running_reward) << ','
            << FormatDouble(*best_) << '\n';
    }
  }
}

namespace {

template <typename T>
T ParseField(const std::string& text, const std::filesystem::path& path, int line) {
  T v{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(path.string() + ":" + std::to_string(line) + ": cannot parse '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<HistoryRow> ReadHistory(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kHistoryHeader) throw Error(path.string() + ": unexpected header");
  std::vector<HistoryRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 7) throw Error(path.string() + ":" + std::to_string(lineno) + ": expected 7 fields");
    HistoryRow r;
    r.episode = ParseField<int>(f[0], path, lineno);
    r.sample_index = ParseField<int>(f[1], path, lineno);
    r.reward = ParseField<double>(f[2], path, lineno);
    r.valid = ParseField<int>(f[3], path, lineno) != 0;
    r.violation_sum = ParseField<double>(f[4], path, lineno);
    r.running_reward = ParseField<double>(f[5], path, lineno);
    r.best_reward = ParseField<double>(f[6], path, lineno);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace coredse::app
