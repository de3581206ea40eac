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

#ifndef BATCHBANDIT_TRAJECTORY_H_
#define BATCHBANDIT_TRAJECTORY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/strings/string_view.h"

#include "batchbandit/reward.h"

namespace batchbandit {

enum class CommitReason {
  kNone,        // Never locked onto one arm (e.g. UCB2).
  kTest,        // The confidence test separated the arms at t_l.
  kGoForBroke,  // Terminal batch chose the larger empirical mean.
};

absl::string_view CommitReasonName(CommitReason reason);

// Realized run of a policy on one instance. Rounds are 1-based in the
// docs; arms[t - 1] is the arm pulled at round t.
struct Trajectory {
  std::vector<Arm> arms;
  std::vector<double> rewards;

  double gap = 0.0;
  int64_t suboptimal_pulls = 0;
  // gap * suboptimal_pulls.
  double pseudo_regret = 0.0;
  // T * mu_star - sum of rewards.
  double realized_regret = 0.0;
  // Rounds t >= 2 with arms[t] != arms[t - 1].
  int64_t switches = 0;

  // Last round whose data informed the final commitment; every round after
  // it pulls committed_arm.
  std::optional<int64_t> commit_time;
  std::optional<Arm> committed_arm;
  CommitReason commit_reason = CommitReason::kNone;
  // 1-based batch index l of a test commitment.
  std::optional<int> commit_batch;

  // End round of every batch (grid times for ETC, epoch ends for UCB2).
  std::vector<int64_t> batch_ends;

  int64_t horizon() const { return static_cast<int64_t>(arms.size()); }
  int num_batches() const { return static_cast<int>(batch_ends.size()); }
};

// Fills the derived fields (suboptimal pulls, regrets, switches) from arms
// and rewards.
void Summarize(const BanditInstance& instance, Trajectory& trajectory);

}  // namespace batchbandit

#endif  // BATCHBANDIT_TRAJECTORY_H_
