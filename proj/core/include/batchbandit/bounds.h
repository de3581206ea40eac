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

#ifndef BATCHBANDIT_BOUNDS_H_
#define BATCHBANDIT_BOUNDS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "batchbandit/grid.h"

namespace batchbandit {

// tau(gap) = min(T, theta) where theta is the smallest integer with
// gap >= 16 sqrt(log(2T / theta) / theta), the log clamped at 0 once
// theta >= 2T. The predicate is monotone in theta, so a binary search over
// [1, 2T] is exact.
int64_t Tau(double gap, int64_t horizon);

// m(gap, T): the first interior index m in [1, M-1] with t_m >= tau(gap),
// or M - 1 when tau(gap) > t_{M-1}.
int GridIndex(double gap, const Grid& grid);

// Regret upper bound of the ETC policy over `grid`:
//   9 gap t_m + T gap exp(-t_{M-1} gap^2 / 16) 1(m = M - 1),  m = m(gap, T).
double EtcRegretUpper(double gap, const Grid& grid);

// Regret lower bound shared by every M-batch policy over `grid`:
//   gap * sum_{j=1}^{M} (t_j / 4) exp(-t_{j-1} gap^2 / 2),  t_0 = 0.
double LowerBound(double gap, const Grid& grid);

// Rates (without constants) that every M-batch policy must pay for the
// excess-regret, competitive-ratio and maximum functionals.
struct BatchRates {
  double excess = 0.0;             // T / M
  double competitive_ratio = 0.0;  // T^{1/M}
  double maximum = 0.0;            // T^{1/(2 - 2^{1-M})}
};
absl::StatusOr<BatchRates> LowerBoundRates(int64_t horizon,
                                              int num_batches);

// Oracle rate R*(gap) = blog(T gap^2) / gap.
double OracleRate(double gap, int64_t horizon);

// Serialized as prop1_upper, lb_formula and empirical.
enum class BoundKind { kEtcUpper, kLowerBound, kEmpirical };
absl::string_view BoundKindName(BoundKind kind);

struct BoundCurve {
  std::vector<double> delta_mesh;  // Strictly increasing, within (0, 1].
  std::vector<double> values;      // Non-negative, one per mesh point.
  int64_t horizon = 0;
  int num_batches = 0;
  GridKind grid_kind = GridKind::kCustom;
  BoundKind bound_kind = BoundKind::kEtcUpper;
};

inline constexpr int kDefaultMeshSize = 512;
inline constexpr double kDefaultMeshLow = 1e-3;

// `size` log-spaced gaps from `low` to 1 inclusive.
std::vector<double> LogMesh(int size = kDefaultMeshSize,
                            double low = kDefaultMeshLow);

// Evaluates EtcRegretUpper or LowerBound over the mesh.
absl::StatusOr<BoundCurve> MakeBoundCurve(const Grid& grid, BoundKind kind,
                                          const std::vector<double>& mesh);

enum class FunctionalKind { kExcess, kCompetitiveRatio, kMaximum };
absl::string_view FunctionalKindName(FunctionalKind kind);

struct Functional {
  FunctionalKind kind = FunctionalKind::kMaximum;
  double c = 1.0;  // Excess regret only; must be positive.
};

// Max over the mesh of R - C R*, R / R*, or R.
absl::StatusOr<double> EvaluateFunctional(const BoundCurve& curve,
                                          const Functional& functional);

}  // namespace batchbandit

#endif  // BATCHBANDIT_BOUNDS_H_
