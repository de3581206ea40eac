// Copyright 2026 The batchbandit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "batchbandit/trajectory.h"

#include <cstdint>

#include "absl/strings/string_view.h"

namespace batchbandit {

absl::string_view CommitReasonName(CommitReason reason) {
  switch (reason) {
    case CommitReason::kNone:
      return "none";
    case CommitReason::kTest:
      return "test";
    case CommitReason::kGoForBroke:
      return "go_for_broke";
  }
  return "unknown";
}

void Summarize(const BanditInstance& instance, Trajectory& trajectory) {
  const Arm worse = instance.suboptimal_arm();
  int64_t suboptimal = 0;
  int64_t switches = 0;
  double total_reward = 0.0;
  for (size_t t = 0; t < trajectory.arms.size(); ++t) {
    if (trajectory.arms[t] == worse) ++suboptimal;
    if (t > 0 && trajectory.arms[t] != trajectory.arms[t - 1]) ++switches;
  }
  for (double r : trajectory.rewards) total_reward += r;

  const double best_mean = instance.mean(instance.optimal_arm);
  trajectory.gap = instance.gap;
  trajectory.suboptimal_pulls = suboptimal;
  trajectory.pseudo_regret = instance.gap * static_cast<double>(suboptimal);
  trajectory.realized_regret =
      best_mean * static_cast<double>(trajectory.arms.size()) - total_reward;
  trajectory.switches = switches;
}

}  // namespace batchbandit
