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

#include "batchbandit/etc_policy.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/string_view.h"

namespace batchbandit {
namespace {

double Radius(int64_t s, int64_t horizon) {
  if (s == 0) return std::numeric_limits<double>::infinity();
  const double log_term = std::max(
      0.0, std::log(static_cast<double>(horizon) / static_cast<double>(s)));
  return 2.0 * std::sqrt(2.0 * log_term / static_cast<double>(s));
}

absl::StatusOr<Trajectory> Run(const Grid& grid,
                               const BanditInstance& instance, RngStream& rng,
                               BatchMode mode, RewardSource rewards) {
  if (std::vector<std::string> violations = ValidateGrid(grid);
      !violations.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid grid: ", absl::StrJoin(violations, "; ")));
  }
  const int num_batches = grid.num_batches();
  const int64_t horizon = grid.horizon;

  Trajectory trajectory;
  trajectory.arms.reserve(horizon);
  trajectory.rewards.reserve(horizon);
  trajectory.batch_ends = grid.times;

  PolicyState state;
  int64_t t = 0;
  auto pull = [&](Arm arm) {
    ++t;
    const double reward = rewards(arm, t);
    trajectory.arms.push_back(arm);
    trajectory.rewards.push_back(reward);
    state.stats.Record(arm, reward);
    state.last_arm = arm;
  };

  for (int m = 1; m <= num_batches; ++m) {
    state.batch = m;
    const int64_t batch_end = grid.time(m);

    if (!state.committed_arm && m == num_batches) {
      absl::StatusOr<Arm> choice = GoForBroke(state.stats);
      if (!choice.ok()) return choice.status();
      state.committed_arm = *choice;
      trajectory.commit_reason = CommitReason::kGoForBroke;
      trajectory.commit_time = grid.time(num_batches - 1);
    }

    if (state.committed_arm) {
      while (t < batch_end) pull(*state.committed_arm);
      continue;
    }

    for (Arm arm : BatchOrder(batch_end - t, mode, state.last_arm, rng)) {
      pull(arm);
    }
    if (m <= num_batches - 2) {
      if (std::optional<Arm> winner = RunTest(state.stats, batch_end, horizon)) {
        state.committed_arm = *winner;
        state.commit_batch = m;
        trajectory.commit_reason = CommitReason::kTest;
        trajectory.commit_time = batch_end;
        trajectory.commit_batch = m;
      }
    }
  }

  trajectory.committed_arm = state.committed_arm;
  Summarize(instance, trajectory);
  return trajectory;
}

}  // namespace

absl::StatusOr<double> ConfidenceRadius(int64_t s, int64_t horizon) {
  if (s < 0 || s > horizon) {
    return absl::InvalidArgumentError(absl::StrCat(
        "confidence radius needs 0 <= s <= T, got s = ", s, ", T = ", horizon));
  }
  return Radius(s, horizon);
}

std::optional<Arm> RunTest(const ArmStats& stats, int64_t t,
                           int64_t horizon) {
  if (t <= 0 || t % 2 != 0) return std::nullopt;
  const int64_t s = t / 2;
  if (s > horizon || stats.count(Arm::kFirst) != s ||
      stats.count(Arm::kSecond) != s) {
    return std::nullopt;
  }
  const double radius = Radius(s, horizon);
  const double first = stats.mean(Arm::kFirst);
  const double second = stats.mean(Arm::kSecond);
  if (first - radius > second + radius) return Arm::kFirst;
  if (second - radius > first + radius) return Arm::kSecond;
  return std::nullopt;
}

absl::StatusOr<Arm> GoForBroke(const ArmStats& stats) {
  if (stats.count(Arm::kFirst) == 0 || stats.count(Arm::kSecond) == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("go-for-broke needs both arms pulled, counts = (",
                     stats.count(Arm::kFirst), ", ",
                     stats.count(Arm::kSecond), ")"));
  }
  return stats.mean(Arm::kSecond) > stats.mean(Arm::kFirst) ? Arm::kSecond
                                                            : Arm::kFirst;
}

absl::string_view BatchModeName(BatchMode mode) {
  switch (mode) {
    case BatchMode::kShuffled:
      return "shuffled";
    case BatchMode::kLowSwitch:
      return "low_switch";
  }
  return "unknown";
}

absl::StatusOr<BatchMode> ParseBatchMode(absl::string_view name) {
  if (name == "shuffled") return BatchMode::kShuffled;
  if (name == "low_switch") return BatchMode::kLowSwitch;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown batch mode '", name, "' (expected shuffled or low_switch)"));
}

std::vector<Arm> BatchOrder(int64_t n, BatchMode mode, Arm last_arm,
                            RngStream& rng) {
  if (n <= 0) return {};
  const int64_t major = (n + 1) / 2;
  Arm first = last_arm;
  if (mode == BatchMode::kShuffled) {
    first = Arm::kFirst;
    if (n % 2 != 0 && rng.Uniform() >= 0.5) first = Arm::kSecond;
  }
  std::vector<Arm> order(n, OtherArm(first));
  std::fill_n(order.begin(), major, first);
  if (mode == BatchMode::kShuffled) std::shuffle(order.begin(), order.end(), rng);
  return order;
}

absl::StatusOr<Trajectory> RunEtc(const Grid& grid,
                                  const BanditInstance& instance,
                                  RngStream& rng, BatchMode mode) {
  auto draw = [&](Arm arm, int64_t) { return SampleReward(instance, arm, rng); };
  return Run(grid, instance, rng, mode, draw);
}

absl::StatusOr<Trajectory> RunEtc(const Grid& grid,
                                  const BanditInstance& instance,
                                  RngStream& rng, BatchMode mode,
                                  RewardSource rewards) {
  return Run(grid, instance, rng, mode, rewards);
}

}  // namespace batchbandit
