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

#ifndef BATCHBANDIT_CONCENTRATION_H_
#define BATCHBANDIT_CONCENTRATION_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace batchbandit {

// Outcome of a Monte Carlo check of a probability bound.
struct MonteCarloCheck {
  int64_t hits = 0;
  int64_t trials = 0;
  double frequency = 0.0;
  double bound = 0.0;
  // Binomial standard deviation of the frequency if the bound were exact.
  double sigma = 0.0;

  bool Passes(double sigmas) const {
    return frequency <= bound + sigmas * sigma;
  }
};

// 2 sqrt((2 / t) log(4 tau / (delta t))): the crossing level of the
// uniform-in-time bound on the running mean of a sub-Gaussian martingale
// difference sequence.
double MaximalThreshold(int64_t t, int64_t tau, double delta);

// Fraction of `reps` standard Gaussian walks whose running mean reaches
// MaximalThreshold(t, tau, delta) for some t <= tau. Bound: delta.
absl::StatusOr<MonteCarloCheck> VerifyMaximalInequality(double delta,
                                                        int64_t tau,
                                                        int64_t reps,
                                                        uint64_t seed,
                                                        int threads = 0);

// Gaussian arms with means (gap, 0) pulled t/2 times each; counts how often
// go-for-broke picks the worse arm. Bound: exp(-t gap^2 / 16).
absl::StatusOr<MonteCarloCheck> GoForBrokeErrorRate(int64_t t, double gap,
                                                    int64_t reps,
                                                    uint64_t seed,
                                                    int threads = 0);

// Same arms, tested once at the even time t_bar of a horizon-T run; counts
// how often the test fails to name the better arm (wrong or inconclusive).
// Requires gap >= 16 sqrt(log(2T / t_bar) / t_bar). Bound: 4 t_bar / T.
absl::StatusOr<MonteCarloCheck> TestErrorRate(int64_t t_bar, int64_t horizon,
                                              double gap, int64_t reps,
                                              uint64_t seed, int threads = 0);

}  // namespace batchbandit

#endif  // BATCHBANDIT_CONCENTRATION_H_
