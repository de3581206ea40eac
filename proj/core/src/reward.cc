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
#include <random>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace batchbandit {
namespace {

absl::Status ValidateMean(const RewardFamily& family, double mu,
                          absl::string_view which) {
  if (!std::isfinite(mu)) {
    return absl::InvalidArgumentError(
        absl::StrCat(which, " must be finite, got ", mu));
  }
  switch (family.kind) {
    case FamilyKind::kGaussian:
      return absl::OkStatus();
    case FamilyKind::kBernoulli:
      if (mu < 0.0 || mu > 1.0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "bernoulli mean must lie in [0, 1]: ", which, " = ", mu));
      }
      return absl::OkStatus();
    case FamilyKind::kPoisson:
      if (!(mu > 0.0)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "poisson mean must be positive: ", which, " = ", mu));
      }
      return absl::OkStatus();
    case FamilyKind::kStudentT:
      return absl::OkStatus();
  }
  return absl::InternalError("unknown reward family");
}

}  // namespace

absl::string_view FamilyName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kGaussian:
      return "gaussian";
    case FamilyKind::kBernoulli:
      return "bernoulli";
    case FamilyKind::kPoisson:
      return "poisson";
    case FamilyKind::kStudentT:
      return "student_t";
  }
  return "unknown";
}

absl::StatusOr<FamilyKind> ParseFamilyKind(absl::string_view name) {
  for (FamilyKind kind : {FamilyKind::kGaussian, FamilyKind::kBernoulli,
                          FamilyKind::kPoisson, FamilyKind::kStudentT}) {
    if (name == FamilyName(kind)) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown reward family '", name,
                   "' (expected gaussian, bernoulli, poisson or student_t)"));
}

absl::StatusOr<BanditInstance> MakeInstance(const RewardFamily& family,
                                            double mu1, double mu2) {
  if (family.kind == FamilyKind::kStudentT && !(family.dof > 2.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "student_t degrees of freedom must exceed 2, got ", family.dof));
  }
  if (absl::Status s = ValidateMean(family, mu1, "mu1"); !s.ok()) return s;
  if (absl::Status s = ValidateMean(family, mu2, "mu2"); !s.ok()) return s;

  BanditInstance instance;
  instance.family = family;
  instance.mu = {mu1, mu2};
  instance.gap = std::fabs(mu1 - mu2);
  instance.optimal_arm = mu2 > mu1 ? Arm::kSecond : Arm::kFirst;
  return instance;
}

double SampleReward(const BanditInstance& instance, Arm arm, RngStream& rng) {
  const double mu = instance.mean(arm);
  switch (instance.family.kind) {
    case FamilyKind::kGaussian:
      return mu + rng.Normal();
    case FamilyKind::kBernoulli:
      return rng.Uniform() < mu ? 1.0 : 0.0;
    case FamilyKind::kPoisson: {
      std::poisson_distribution<long long> poisson(mu);
      return static_cast<double>(poisson(rng));
    }
    case FamilyKind::kStudentT: {
      std::student_t_distribution<double> student(instance.family.dof);
      return mu + student(rng);
    }
  }
  return mu;
}

}  // namespace batchbandit
