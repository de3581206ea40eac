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

#ifndef BATCHBANDIT_ETC_POLICY_H_
#define BATCHBANDIT_ETC_POLICY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "absl/functional/function_ref.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "batchbandit/grid.h"
#include "batchbandit/reward.h"
#include "batchbandit/rng.h"
#include "batchbandit/trajectory.h"

namespace batchbandit {

// Pull counts T_i(t) and reward sums per arm.
struct ArmStats {
  std::array<int64_t, 2> counts = {0, 0};
  std::array<double, 2> sums = {0.0, 0.0};

  void Record(Arm arm, double reward) {
    ++counts[ArmIndex(arm)];
    sums[ArmIndex(arm)] += reward;
  }
  int64_t count(Arm arm) const { return counts[ArmIndex(arm)]; }
  int64_t total() const { return counts[0] + counts[1]; }
  // Empirical mean; requires count(arm) > 0.
  double mean(Arm arm) const {
    return sums[ArmIndex(arm)] / static_cast<double>(counts[ArmIndex(arm)]);
  }
};

struct PolicyState {
  ArmStats stats;
  int batch = 1;                     // J(t), 1-based.
  std::optional<int> commit_batch;   // l, once a test has fired.
  std::optional<Arm> committed_arm;
  Arm last_arm = Arm::kFirst;
};

// B_s = 2 sqrt(2 log(T/s) / s), B_0 = +inf, B_T = 0. Fails for s outside
// [0, T].
absl::StatusOr<double> ConfidenceRadius(int64_t s, int64_t horizon);

// The within-batch test at round t: returns arm i when both arms have t/2
// pulls and mean_i - B_{t/2} > mean_j + B_{t/2}; nullopt (inconclusive)
// otherwise, including every unbalanced state.
std::optional<Arm> RunTest(const ArmStats& stats, int64_t t, int64_t horizon);

// Arm with the larger empirical mean; ties go to Arm::kFirst. Fails when an
// arm has never been pulled.
absl::StatusOr<Arm> GoForBroke(const ArmStats& stats);

enum class BatchMode {
  kShuffled,   // Uniform over balanced sequences.
  kLowSwitch,  // last_arm for the first half, the other arm after.
};

absl::string_view BatchModeName(BatchMode mode);
absl::StatusOr<BatchMode> ParseBatchMode(absl::string_view name);

// Allocation for one exploration batch of n rounds. Counts differ by at
// most one. Shuffled mode spends one uniform draw to pick the majority arm
// when n is odd, then shuffles.
std::vector<Arm> BatchOrder(int64_t n, BatchMode mode, Arm last_arm,
                            RngStream& rng);

// Reward of `arm` at 1-based round `t`.
using RewardSource = absl::FunctionRef<double(Arm arm, int64_t t)>;

// Generic explore-then-commit policy over `grid`. Tests run at t_1..t_{M-2};
// an undecided policy goes for broke at t_{M-1}. Rewards are drawn from
// `rng` after the batch allocation, so the whole run is a pure function of
// the stream spec.
absl::StatusOr<Trajectory> RunEtc(const Grid& grid,
                                  const BanditInstance& instance,
                                  RngStream& rng, BatchMode mode);

// Same policy with rewards supplied by the caller; `rng` only drives the
// batch allocation. Used to replay a run with altered rewards.
absl::StatusOr<Trajectory> RunEtc(const Grid& grid,
                                  const BanditInstance& instance,
                                  RngStream& rng, BatchMode mode,
                                  RewardSource rewards);

}  // namespace batchbandit

#endif  // BATCHBANDIT_ETC_POLICY_H_
