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

#include <string>
#include <vector>

namespace coredse::objective {

// Residual of one violated performance constraint h_j(U) > 0.
struct Violation {
  std::string name;
  double residual = 0.0;
};

// What the simulator returns for one design: J metrics plus violated
// constraints, or an anomalous marker when the design could not be scored.
struct EvalOutcome {
  bool anomalous = false;
  std::string reason;
  std::vector<double> metrics;
  std::vector<Violation> violations;

  static EvalOutcome Anomalous(std::string why) { return {true, std::move(why), {}, {}}; }
  double violation_sum() const {
    double s = 0.0;
    for (const auto& v : violations) s += v.residual;
    return s;
  }
  bool feasible() const { return !anomalous && violations.empty(); }
  bool operator==(const EvalOutcome& o) const {
    if (anomalous != o.anomalous || reason != o.reason || metrics != o.metrics) return false;
    if (violations.size() != o.violations.size()) return false;
    for (std::size_t i = 0; i < violations.size(); ++i) {
      if (violations[i].name != o.violations[i].name || violations[i].residual != o.violations[i].residual) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace coredse::objective
