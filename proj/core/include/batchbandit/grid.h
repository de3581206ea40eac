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

#ifndef BATCHBANDIT_GRID_H_
#define BATCHBANDIT_GRID_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace batchbandit {

enum class GridKind { kArithmetic, kGeometric, kMinimax, kCustom };

absl::string_view GridKindName(GridKind kind);
absl::StatusOr<GridKind> ParseGridKind(absl::string_view name);

// Decision times t_1 < ... < t_M = T of an M-batch policy. Batch m covers
// rounds (t_{m-1}, t_m] with t_0 = 0. Interior times are even so that a
// balanced batch pulls each arm exactly half of the time.
struct Grid {
  int64_t horizon = 0;
  std::vector<int64_t> times;
  GridKind kind = GridKind::kCustom;
  std::optional<double> a;  // Construction parameter (geometric, minimax).
  bool truncated = false;   // Some constructed points collided and were dropped.

  int num_batches() const { return static_cast<int>(times.size()); }
  // t_m for m in [0, M]; t_0 = 0.
  int64_t time(int m) const { return m == 0 ? 0 : times[m - 1]; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

// max(1, log x), natural log.
double Blog(double x);

// Greatest even integer <= x. Negative inputs are rejected.
absl::StatusOr<int64_t> FloorEven(double x);

// t_m = floor_even(m T / M) for m < M, t_M = T.
absl::StatusOr<Grid> ArithmeticGrid(int64_t horizon, int num_batches);

struct GeometricParams {
  double a = 0.0;
  // a >= (M T / log T)^{1/M}: the growth condition the terminal-batch bound
  // needs. Always true for the default a.
  bool growth_ok = false;
  // M <= log(T / log T), the range where the competitive-ratio bound holds.
  bool batches_ok = false;
};

// a = 2 (T / log T)^{1/M}.
GeometricParams GeometricA(int64_t horizon, int num_batches);

// t_m = floor_even(a^m) for m < M, t_M = T. Requires T >= 3.
absl::StatusOr<Grid> GeometricGrid(int64_t horizon, int num_batches);

// Exponent sequence S_k = 2 - 2^{-k} (k >= 0), S_k = 0 for k < 0.
double MinimaxExponent(int k);

struct MinimaxParams {
  double a = 0.0;
  // 2^M <= log(2T) / 6. The simulations routinely run outside this range, so
  // it is reported rather than enforced.
  bool condition_ok = false;
  // 15 a^{S_{M-2}} <= 2T, the growth condition behind the recurrence bound.
  bool growth_ok = false;
};

// a = (2T)^{1/S_{M-1}} * blog((2T)^{15/(2^M-1)})^{1/4 - (3/4)/(2^M-1)}.
absl::StatusOr<MinimaxParams> MinimaxA(int64_t horizon, int num_batches);

// u_1 = a, u_{j+1} = a sqrt(u_j / blog(2T / u_j)), t_m = floor_even(u_m).
// The recurrence stops at the first point that reaches T or fails to
// increase; the grid is then truncated.
absl::StatusOr<Grid> MinimaxGrid(int64_t horizon, int num_batches);

absl::StatusOr<Grid> MakeGrid(GridKind kind, int64_t horizon, int num_batches);

// Wraps explicit times as a custom grid and validates it.
absl::StatusOr<Grid> CustomGrid(int64_t horizon, std::vector<int64_t> times);

// Every violation of: M >= 2, 0 < t_1 < ... < t_M, t_M = T, t_1..t_{M-1}
// even. Empty when the grid is usable by the ETC policy.
std::vector<std::string> ValidateGrid(const Grid& grid);

}  // namespace batchbandit

#endif  // BATCHBANDIT_GRID_H_
