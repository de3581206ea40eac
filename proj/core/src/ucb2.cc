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

#include "batchbandit/ucb2.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace batchbandit {

int64_t Ucb2EpochLength(double alpha, int r) {
  return static_cast<int64_t>(std::ceil(std::pow(1.0 + alpha, r)));
}

absl::StatusOr<Trajectory> RunUcb2(const Ucb2Config& config,
                                   const BanditInstance& instance,
                                   RngStream& rng) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("UCB2 alpha must lie in (0, 1), got ", config.alpha));
  }
  if (config.horizon < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("UCB2 needs T >= 2, got ", config.horizon));
  }
  const int64_t horizon = config.horizon;
  const double alpha = config.alpha;

  Trajectory trajectory;
  trajectory.arms.reserve(horizon);
  trajectory.rewards.reserve(horizon);
  std::array<int64_t, 2> pulls = {0, 0};
  std::array<double, 2> sums = {0.0, 0.0};
  std::array<int, 2> epochs = {0, 0};

  auto pull = [&](Arm arm) {
    const double reward = SampleReward(instance, arm, rng);
    trajectory.arms.push_back(arm);
    trajectory.rewards.push_back(reward);
    ++pulls[ArmIndex(arm)];
    sums[ArmIndex(arm)] += reward;
  };

  pull(Arm::kFirst);
  pull(Arm::kSecond);
  trajectory.batch_ends.push_back(2);

  auto index = [&](Arm arm) {
    const int i = ArmIndex(arm);
    const double tau = static_cast<double>(Ucb2EpochLength(alpha, epochs[i]));
    const double n = static_cast<double>(trajectory.arms.size());
    const double bonus = std::sqrt((1.0 + alpha) *
                                   std::log(std::numbers::e * n / tau) /
                                   (2.0 * tau));
    return sums[i] / static_cast<double>(pulls[i]) + bonus;
  };

  while (trajectory.horizon() < horizon) {
    const Arm chosen =
        index(Arm::kSecond) > index(Arm::kFirst) ? Arm::kSecond : Arm::kFirst;
    const int i = ArmIndex(chosen);
    const int64_t length = Ucb2EpochLength(alpha, epochs[i] + 1) -
                           Ucb2EpochLength(alpha, epochs[i]);
    ++epochs[i];
    if (length <= 0) continue;
    const int64_t plays = std::min(length, horizon - trajectory.horizon());
    for (int64_t k = 0; k < plays; ++k) pull(chosen);
    trajectory.batch_ends.push_back(trajectory.horizon());
  }

  Summarize(instance, trajectory);
  return trajectory;
}

}  // namespace batchbandit
