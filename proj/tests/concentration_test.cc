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

#include <cmath>
#include <cstdint>

#include "absl/status/status.h"
#include "gtest/gtest.h"

namespace batchbandit {
namespace {

double NormalTail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

TEST(MaximalThresholdTest, TerminalValueAndMonotonicity) {
  EXPECT_DOUBLE_EQ(MaximalThreshold(1000, 1000, 0.05),
                   2.0 * std::sqrt(2.0 / 1000 * std::log(4.0 / 0.05)));
  EXPECT_GT(MaximalThreshold(1000, 1000, 0.01),
            MaximalThreshold(1000, 1000, 0.1));
  EXPECT_GT(MaximalThreshold(10, 1000, 0.05),
            MaximalThreshold(100, 1000, 0.05));
}

TEST(VerifyMaximalInequalityTest, SingleRoundMatchesGaussianTail) {
  // P(Z >= 2 sqrt(2 ln 80)) is about 1.6e-9.
  EXPECT_LT(NormalTail(2.0 * std::sqrt(2.0 * std::log(80.0))), 2e-9);
  absl::StatusOr<MonteCarloCheck> check =
      VerifyMaximalInequality(0.05, 1, 200000, 1);
  ASSERT_TRUE(check.ok());
  EXPECT_EQ(check->hits, 0);
  EXPECT_EQ(check->trials, 200000);
}

TEST(VerifyMaximalInequalityTest, FrequencyBelowDelta) {
  absl::StatusOr<MonteCarloCheck> check =
      VerifyMaximalInequality(0.1, 1000, 10000, 7);
  ASSERT_TRUE(check.ok());
  EXPECT_LE(check->frequency, 0.1);
  EXPECT_EQ(check->bound, 0.1);
  EXPECT_TRUE(check->Passes(0.0));
}

TEST(VerifyMaximalInequalityTest, RejectsBadArguments) {
  EXPECT_FALSE(VerifyMaximalInequality(0.0, 10, 10, 0).ok());
  EXPECT_FALSE(VerifyMaximalInequality(1.0, 10, 10, 0).ok());
  EXPECT_FALSE(VerifyMaximalInequality(0.1, 0, 10, 0).ok());
  EXPECT_FALSE(VerifyMaximalInequality(0.1, 10, 0, 0).ok());
}

TEST(GoForBrokeErrorRateTest, MatchesExactGaussianError) {
  // Mean difference after s pulls per arm is N(gap, 2 / s).
  constexpr int64_t kReps = 100000;
  for (auto [t, gap] : {std::pair<int64_t, double>{32, 0.5},
                        std::pair<int64_t, double>{128, 0.2}}) {
    const double exact = NormalTail(gap * std::sqrt(t / 2 / 2.0));
    absl::StatusOr<MonteCarloCheck> check = GoForBrokeErrorRate(t, gap, kReps, 3);
    ASSERT_TRUE(check.ok());
    const double sigma = std::sqrt(exact * (1 - exact) / kReps);
    EXPECT_NEAR(check->frequency, exact, 4 * sigma) << "t = " << t;
    EXPECT_DOUBLE_EQ(check->bound, std::exp(-t * gap * gap / 16.0));
  }
}

TEST(GoForBrokeErrorRateTest, ZeroGapIsACoinFlip) {
  // Ties are measure zero; the second arm wins half the time.
  absl::StatusOr<MonteCarloCheck> check = GoForBrokeErrorRate(2, 0.0, 40000, 4);
  ASSERT_TRUE(check.ok());
  EXPECT_NEAR(check->frequency, 0.5, 0.01);
}

TEST(GoForBrokeErrorRateTest, RejectsOddTime) {
  EXPECT_EQ(GoForBrokeErrorRate(7, 0.5, 10, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(GoForBrokeErrorRate(8, 0.5, 0, 0).ok());
}

TEST(TestErrorRateTest, BelowBound) {
  absl::StatusOr<MonteCarloCheck> check =
      TestErrorRate(4096, 1'000'000, 0.7, 5000, 5);
  ASSERT_TRUE(check.ok());
  EXPECT_DOUBLE_EQ(check->bound, 4.0 * 4096 / 1e6);
  EXPECT_TRUE(check->Passes(3.0)) << check->frequency;
}

TEST(TestErrorRateTest, RequiresSeparatedGap) {
  EXPECT_EQ(TestErrorRate(4096, 1'000'000, 0.5, 10, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(TestErrorRate(4096, 1000, 0.9, 10, 0).ok());
}

TEST(MonteCarloTest, IndependentOfThreadCount) {
  absl::StatusOr<MonteCarloCheck> one = GoForBrokeErrorRate(16, 0.3, 4000, 9, 1);
  absl::StatusOr<MonteCarloCheck> four = GoForBrokeErrorRate(16, 0.3, 4000, 9, 4);
  ASSERT_TRUE(one.ok());
  ASSERT_TRUE(four.ok());
  EXPECT_EQ(one->hits, four->hits);
  EXPECT_GT(one->hits, 0);
}

}  // namespace
}  // namespace batchbandit
