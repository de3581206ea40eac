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

#include "batchbandit/concentration.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "batchbandit/etc_policy.h"
#include "batchbandit/parallel.h"
#include "batchbandit/reward.h"
#include "batchbandit/rng.h"

namespace batchbandit {
namespace {

absl::Status CheckReps(int64_t reps) {
  if (reps < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least one replication, got ", reps));
  }
  return absl::OkStatus();
}

// Runs `trial` once per replication on its own stream and tallies hits.
template <typename Trial>
MonteCarloCheck Tally(absl::string_view label, int64_t reps, uint64_t seed,
                      int threads, double bound, Trial trial) {
  const uint64_t base = HashLabel(label);
  std::vector<char> hit(reps, 0);
  ParallelFor(reps, ResolveThreads(threads), [&](int64_t r) {
    RngStream rng = MakeRngStream(seed, HashCombine(base, r));
    hit[r] = trial(rng) ? 1 : 0;
  });
  MonteCarloCheck check;
  check.trials = reps;
  check.hits = std::accumulate(hit.begin(), hit.end(), int64_t{0});
  check.frequency = static_cast<double>(check.hits) / reps;
  check.bound = bound;
  const double p = std::min(1.0, std::max(0.0, bound));
  check.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
  return check;
}

ArmStats PullBalanced(const BanditInstance& instance, int64_t per_arm,
                      RngStream& rng) {
  ArmStats stats;
  for (int64_t k = 0; k < per_arm; ++k) {
    stats.Record(Arm::kFirst, SampleReward(instance, Arm::kFirst, rng));
    stats.Record(Arm::kSecond, SampleReward(instance, Arm::kSecond, rng));
  }
  return stats;
}

absl::Status CheckEvenTime(int64_t t) {
  if (t < 2 || t % 2 != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("balanced pulls need an even time >= 2, got ", t));
  }
  return absl::OkStatus();
}

}  // namespace

double MaximalThreshold(int64_t t, int64_t tau, double delta) {
  const double td = static_cast<double>(t);
  return 2.0 * std::sqrt(2.0 / td *
                         std::log(4.0 * static_cast<double>(tau) / (delta * td)));
}

absl::StatusOr<MonteCarloCheck> VerifyMaximalInequality(double delta,
                                                        int64_t tau,
                                                        int64_t reps,
                                                        uint64_t seed,
                                                        int threads) {
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  if (tau < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("tau must be at least 1, got ", tau));
  }
  if (absl::Status s = CheckReps(reps); !s.ok()) return s;

  // Crossing test on the running sum: sum_t >= t * threshold(t).
  std::vector<double> level(tau);
  for (int64_t t = 1; t <= tau; ++t) {
    level[t - 1] = static_cast<double>(t) * MaximalThreshold(t, tau, delta);
  }
  return Tally("maximal", reps, seed, threads, delta, [&](RngStream& rng) {
    double sum = 0.0;
    for (int64_t t = 1; t <= tau; ++t) {
      sum += rng.Normal();
      if (sum >= level[t - 1]) return true;
    }
    return false;
  });
}

absl::StatusOr<MonteCarloCheck> GoForBrokeErrorRate(int64_t t, double gap,
                                                    int64_t reps,
                                                    uint64_t seed,
                                                    int threads) {
  if (absl::Status s = CheckEvenTime(t); !s.ok()) return s;
  if (absl::Status s = CheckReps(reps); !s.ok()) return s;
  absl::StatusOr<BanditInstance> instance =
      MakeInstance(RewardFamily::Gaussian(), gap, 0.0);
  if (!instance.ok()) return instance.status();

  const double bound = std::exp(-static_cast<double>(t) * gap * gap / 16.0);
  return Tally("go_for_broke", reps, seed, threads, bound,
               [&](RngStream& rng) {
                 const ArmStats stats = PullBalanced(*instance, t / 2, rng);
                 return *GoForBroke(stats) != Arm::kFirst;
               });
}

absl::StatusOr<MonteCarloCheck> TestErrorRate(int64_t t_bar, int64_t horizon,
                                              double gap, int64_t reps,
                                              uint64_t seed, int threads) {
  if (absl::Status s = CheckEvenTime(t_bar); !s.ok()) return s;
  if (absl::Status s = CheckReps(reps); !s.ok()) return s;
  if (t_bar > horizon) {
    return absl::InvalidArgumentError(absl::StrCat(
        "test time ", t_bar, " exceeds the horizon ", horizon));
  }
  const double td = static_cast<double>(t_bar);
  const double needed =
      16.0 * std::sqrt(std::log(2.0 * static_cast<double>(horizon) / td) / td);
  if (gap < needed) {
    return absl::InvalidArgumentError(absl::StrCat(
        "gap ", gap, " is below the separation level ", needed,
        " at t = ", t_bar, "; the error bound does not apply"));
  }
  absl::StatusOr<BanditInstance> instance =
      MakeInstance(RewardFamily::Gaussian(), gap, 0.0);
  if (!instance.ok()) return instance.status();

  const double bound = 4.0 * td / static_cast<double>(horizon);
  return Tally("test_error", reps, seed, threads, bound, [&](RngStream& rng) {
    const ArmStats stats = PullBalanced(*instance, t_bar / 2, rng);
    return RunTest(stats, t_bar, horizon) != std::optional<Arm>(Arm::kFirst);
  });
}

}  // namespace batchbandit
