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

#ifndef BATCHBANDIT_REWARD_H_
#define BATCHBANDIT_REWARD_H_

#include <array>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "batchbandit/rng.h"

namespace batchbandit {

enum class Arm : int { kFirst = 1, kSecond = 2 };

inline constexpr Arm OtherArm(Arm arm) {
  return arm == Arm::kFirst ? Arm::kSecond : Arm::kFirst;
}
inline constexpr int ArmIndex(Arm arm) { return static_cast<int>(arm) - 1; }
inline constexpr int ArmNumber(Arm arm) { return static_cast<int>(arm); }

enum class FamilyKind { kGaussian, kBernoulli, kPoisson, kStudentT };

inline constexpr double kDefaultStudentTDof = 3.0;

// Reward distribution family, location-parameterized by the arm mean.
// Gaussian rewards have unit variance; Student-t rewards are the standard
// t distribution shifted to the arm mean.
struct RewardFamily {
  FamilyKind kind = FamilyKind::kGaussian;
  double dof = kDefaultStudentTDof;  // Student-t only.

  static RewardFamily Gaussian() { return {FamilyKind::kGaussian}; }
  static RewardFamily Bernoulli() { return {FamilyKind::kBernoulli}; }
  static RewardFamily Poisson() { return {FamilyKind::kPoisson}; }
  static RewardFamily StudentT(double dof = kDefaultStudentTDof) {
    return {FamilyKind::kStudentT, dof};
  }

  friend bool operator==(const RewardFamily&, const RewardFamily&) = default;
};

absl::string_view FamilyName(FamilyKind kind);
absl::StatusOr<FamilyKind> ParseFamilyKind(absl::string_view name);

// Two-armed instance. `gap` and `optimal_arm` are derived by MakeInstance;
// equal means resolve the optimal arm to Arm::kFirst.
struct BanditInstance {
  RewardFamily family;
  std::array<double, 2> mu = {0.0, 0.0};
  double gap = 0.0;
  Arm optimal_arm = Arm::kFirst;

  double mean(Arm arm) const { return mu[ArmIndex(arm)]; }
  Arm suboptimal_arm() const { return OtherArm(optimal_arm); }
};

// Fails with InvalidArgument naming the violated constraint, e.g. a
// Bernoulli mean outside [0, 1].
absl::StatusOr<BanditInstance> MakeInstance(const RewardFamily& family,
                                            double mu1, double mu2);

// One independent draw from the arm's distribution.
double SampleReward(const BanditInstance& instance, Arm arm, RngStream& rng);

}  // namespace batchbandit

#endif  // BATCHBANDIT_REWARD_H_
