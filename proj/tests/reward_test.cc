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

#include "batchbandit/reward.h"

#include <cmath>

#include "absl/status/status.h"
#include "gtest/gtest.h"
#include "batchbandit/rng.h"

namespace batchbandit {
namespace {

TEST(MakeInstanceTest, GapAndOptimalArm) {
  absl::StatusOr<BanditInstance> instance =
      MakeInstance(RewardFamily::Gaussian(), 0.5, 0.6);
  ASSERT_TRUE(instance.ok());
  EXPECT_NEAR(instance->gap, 0.1, 1e-15);
  EXPECT_EQ(instance->optimal_arm, Arm::kSecond);
  EXPECT_EQ(instance->suboptimal_arm(), Arm::kFirst);
}

TEST(MakeInstanceTest, TieGoesToFirstArm) {
  absl::StatusOr<BanditInstance> instance =
      MakeInstance(RewardFamily::Bernoulli(), 0.5, 0.5);
  ASSERT_TRUE(instance.ok());
  EXPECT_EQ(instance->gap, 0.0);
  EXPECT_EQ(instance->optimal_arm, Arm::kFirst);
}

TEST(MakeInstanceTest, RejectsInvalidParameters) {
  EXPECT_EQ(MakeInstance(RewardFamily::Bernoulli(), 1.3, 0.5).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(MakeInstance(RewardFamily::Bernoulli(), 0.5, -0.1).ok());
  EXPECT_FALSE(MakeInstance(RewardFamily::Poisson(), 0.0, 1.0).ok());
  EXPECT_FALSE(MakeInstance(RewardFamily::StudentT(2.0), 0.0, 1.0).ok());
  EXPECT_FALSE(MakeInstance(RewardFamily::Gaussian(), NAN, 1.0).ok());
  EXPECT_TRUE(MakeInstance(RewardFamily::StudentT(2.5), 0.0, 1.0).ok());
}

TEST(FamilyNameTest, RoundTrips) {
  for (FamilyKind kind : {FamilyKind::kGaussian, FamilyKind::kBernoulli,
                          FamilyKind::kPoisson, FamilyKind::kStudentT}) {
    absl::StatusOr<FamilyKind> parsed = ParseFamilyKind(FamilyName(kind));
    ASSERT_TRUE(parsed.ok());
    EXPECT_EQ(*parsed, kind);
  }
  EXPECT_EQ(FamilyName(FamilyKind::kStudentT), "student_t");
  EXPECT_FALSE(ParseFamilyKind("cauchy").ok());
}

TEST(SampleRewardTest, DegenerateBernoulli) {
  const BanditInstance instance =
      *MakeInstance(RewardFamily::Bernoulli(), 1.0, 0.0);
  RngStream rng = MakeRngStream(1, 1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(SampleReward(instance, Arm::kFirst, rng), 1.0);
    EXPECT_EQ(SampleReward(instance, Arm::kSecond, rng), 0.0);
  }
}

class SampleMeanTest : public testing::TestWithParam<RewardFamily> {};

TEST_P(SampleMeanTest, MatchesArmMean) {
  const BanditInstance instance = *MakeInstance(GetParam(), 0.3, 0.7);
  RngStream rng = MakeRngStream(11, 4);
  constexpr int kDraws = 200000;
  for (Arm arm : {Arm::kFirst, Arm::kSecond}) {
    double sum = 0.0;
    for (int i = 0; i < kDraws; ++i) sum += SampleReward(instance, arm, rng);
    // Every family here has variance at most 3.
    EXPECT_NEAR(sum / kDraws, instance.mean(arm), 5.0 * std::sqrt(3.0 / kDraws));
  }
}

INSTANTIATE_TEST_SUITE_P(Families, SampleMeanTest,
                         testing::Values(RewardFamily::Gaussian(),
                                         RewardFamily::Bernoulli(),
                                         RewardFamily::Poisson(),
                                         RewardFamily::StudentT()));

TEST(SampleRewardTest, GaussianHasUnitVariance) {
  const BanditInstance instance =
      *MakeInstance(RewardFamily::Gaussian(), 2.0, 0.0);
  RngStream rng = MakeRngStream(2, 2);
  double sum_sq = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const double x = SampleReward(instance, Arm::kFirst, rng) - 2.0;
    sum_sq += x * x;
  }
  EXPECT_NEAR(sum_sq / kDraws, 1.0, 0.02);
}

}  // namespace
}  // namespace batchbandit
