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

#ifndef BATCHBANDIT_UCB2_H_
#define BATCHBANDIT_UCB2_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "batchbandit/reward.h"
#include "batchbandit/rng.h"
#include "batchbandit/trajectory.h"

namespace batchbandit {

inline constexpr double kDefaultUcb2Alpha = 0.1;

struct Ucb2Config {
  double alpha = kDefaultUcb2Alpha;  // In (0, 1).
  int64_t horizon = 0;
};

// Epoch length tau(r) = ceil((1 + alpha)^r).
int64_t Ucb2EpochLength(double alpha, int r);

// UCB2 (Auer, Cesa-Bianchi and Fischer, 2002) on two arms. Each arm is
// pulled once; then the arm maximizing
//   mean_i + sqrt((1 + alpha) log(e n / tau(r_i)) / (2 tau(r_i)))
// is played tau(r_i + 1) - tau(r_i) times and r_i advances. Epochs of
// length zero advance r_i without pulls. Every non-empty epoch, plus the
// initial round-robin, counts as one batch in batch_ends.
absl::StatusOr<Trajectory> RunUcb2(const Ucb2Config& config,
                                   const BanditInstance& instance,
                                   RngStream& rng);

}  // namespace batchbandit

#endif  // BATCHBANDIT_UCB2_H_
