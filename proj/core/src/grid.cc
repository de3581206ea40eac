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

#include "batchbandit/grid.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace batchbandit {
namespace {

// Rounding to double first snaps extended-precision values that sit within
// an ulp of an integer, e.g. (2T)^{2/3} for T = 500.
absl::StatusOr<int64_t> FloorEvenExtended(long double x) {
  return FloorEven(static_cast<double>(x));
}

absl::Status CheckBatchRange(int64_t horizon, int num_batches) {
  if (horizon < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("horizon T must be at least 2, got ", horizon));
  }
  if (num_batches < 2 || num_batches > horizon) {
    return absl::InvalidArgumentError(absl::StrCat(
        "M = ", num_batches, " outside [2, T] for T = ", horizon));
  }
  return absl::OkStatus();
}

// Keeps candidate interior points that lie in (t_prev, T) and appends T.
// Anything dropped marks the grid as truncated.
absl::StatusOr<Grid> Assemble(GridKind kind, int64_t horizon,
                              const std::vector<int64_t>& candidates,
                              std::optional<double> a, bool truncated) {
  Grid grid;
  grid.kind = kind;
  grid.horizon = horizon;
  grid.a = a;
  grid.truncated = truncated;
  int64_t last = 0;
  for (int64_t t : candidates) {
    if (t > last && t < horizon) {
      grid.times.push_back(t);
      last = t;
    } else {
      grid.truncated = true;
    }
  }
  if (grid.times.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "horizon T = ", horizon, " is too small for a ", GridKindName(kind),
        " grid: no interior decision time survives rounding"));
  }
  grid.times.push_back(horizon);
  return grid;
}

}  // namespace

absl::string_view GridKindName(GridKind kind) {
  switch (kind) {
    case GridKind::kArithmetic:
      return "arithmetic";
    case GridKind::kGeometric:
      return "geometric";
    case GridKind::kMinimax:
      return "minimax";
    case GridKind::kCustom:
      return "custom";
  }
  return "unknown";
}

absl::StatusOr<GridKind> ParseGridKind(absl::string_view name) {
  for (GridKind kind : {GridKind::kArithmetic, GridKind::kGeometric,
                        GridKind::kMinimax, GridKind::kCustom}) {
    if (name == GridKindName(kind)) return kind;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown grid kind '", name,
      "' (expected arithmetic, geometric, minimax or custom)"));
}

double Blog(double x) { return std::max(1.0, std::log(x)); }

absl::StatusOr<int64_t> FloorEven(double x) {
  if (std::isnan(x) || x < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("floor_even needs a non-negative argument, got ", x));
  }
  if (x >= 9.0e18) {
    return absl::OutOfRangeError(
        absl::StrCat("floor_even argument too large: ", x));
  }
  const auto n = static_cast<int64_t>(std::floor(x));
  return n - (n % 2);
}

absl::StatusOr<Grid> ArithmeticGrid(int64_t horizon, int num_batches) {
  if (absl::Status s = CheckBatchRange(horizon, num_batches); !s.ok()) {
    return s;
  }
  std::vector<int64_t> candidates;
  candidates.reserve(num_batches - 1);
  for (int m = 1; m < num_batches; ++m) {
    const auto t = static_cast<int64_t>(static_cast<__int128>(m) * horizon /
                                        num_batches);
    candidates.push_back(t - t % 2);
  }
  return Assemble(GridKind::kArithmetic, horizon, candidates, std::nullopt,
                  false);
}

GeometricParams GeometricA(int64_t horizon, int num_batches) {
  const long double T = horizon;
  const long double M = num_batches;
  const long double log_t = std::log(T);
  const long double a = 2.0L * std::pow(T / log_t, 1.0L / M);
  GeometricParams params;
  params.a = static_cast<double>(a);
  params.growth_ok = a >= std::pow(M * T / log_t, 1.0L / M);
  params.batches_ok = log_t > 1.0L && M <= std::log(T / log_t);
  return params;
}

absl::StatusOr<Grid> GeometricGrid(int64_t horizon, int num_batches) {
  if (absl::Status s = CheckBatchRange(horizon, num_batches); !s.ok()) {
    return s;
  }
  if (horizon < 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("geometric grid needs T >= 3, got ", horizon));
  }
  const long double T = horizon;
  const long double a = 2.0L * std::pow(T / std::log(T), 1.0L / num_batches);
  std::vector<int64_t> candidates;
  bool truncated = false;
  for (int m = 1; m < num_batches; ++m) {
    const long double power = std::pow(a, static_cast<long double>(m));
    if (power >= T) {
      truncated = true;
      break;
    }
    absl::StatusOr<int64_t> t = FloorEvenExtended(power);
    if (!t.ok()) return t.status();
    candidates.push_back(*t);
  }
  return Assemble(GridKind::kGeometric, horizon, candidates,
                  static_cast<double>(a), truncated);
}

double MinimaxExponent(int k) {
  if (k < 0) return 0.0;
  return 2.0 - std::ldexp(1.0, -k);
}

absl::StatusOr<MinimaxParams> MinimaxA(int64_t horizon, int num_batches) {
  if (horizon < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("horizon T must be positive, got ", horizon));
  }
  if (num_batches < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("minimax grid needs M >= 2, got ", num_batches));
  }
  const long double two_t = 2.0L * static_cast<long double>(horizon);
  const long double log_two_t = std::log(two_t);
  const long double q = std::ldexp(1.0L, num_batches) - 1.0L;  // 2^M - 1
  const long double s_last = 2.0L - std::ldexp(1.0L, -(num_batches - 1));
  const long double log_arg = std::max(1.0L, 15.0L / q * log_two_t);
  const long double log_power = 0.25L - 0.75L / q;
  const long double a =
      std::exp(log_two_t / s_last) * std::pow(log_arg, log_power);

  MinimaxParams params;
  params.a = static_cast<double>(a);
  params.condition_ok = std::ldexp(1.0L, num_batches) <= log_two_t / 6.0L;
  const long double s_prev = MinimaxExponent(num_batches - 2);
  params.growth_ok = 15.0L * std::pow(a, s_prev) <= two_t;
  return params;
}

absl::StatusOr<Grid> MinimaxGrid(int64_t horizon, int num_batches) {
  if (absl::Status s = CheckBatchRange(horizon, num_batches); !s.ok()) {
    return s;
  }
  absl::StatusOr<MinimaxParams> params = MinimaxA(horizon, num_batches);
  if (!params.ok()) return params.status();

  const long double T = horizon;
  const long double a = params->a;
  long double u = a;
  std::vector<int64_t> candidates;
  bool truncated = false;
  int64_t last = 0;
  for (int j = 1; j < num_batches; ++j) {
    if (u >= T) {
      truncated = true;
      break;
    }
    absl::StatusOr<int64_t> t = FloorEvenExtended(u);
    if (!t.ok()) return t.status();
    if (*t <= last) {
      truncated = true;
      break;
    }
    candidates.push_back(*t);
    last = *t;
    const long double log_term =
        std::max(1.0L, std::log(2.0L * T / u));
    u = a * std::sqrt(u / log_term);
  }
  return Assemble(GridKind::kMinimax, horizon, candidates, params->a,
                  truncated);
}

absl::StatusOr<Grid> MakeGrid(GridKind kind, int64_t horizon,
                              int num_batches) {
  switch (kind) {
    case GridKind::kArithmetic:
      return ArithmeticGrid(horizon, num_batches);
    case GridKind::kGeometric:
      return GeometricGrid(horizon, num_batches);
    case GridKind::kMinimax:
      return MinimaxGrid(horizon, num_batches);
    case GridKind::kCustom:
      break;
  }
  return absl::InvalidArgumentError(
      "custom grids are built from explicit times, see CustomGrid()");
}

absl::StatusOr<Grid> CustomGrid(int64_t horizon, std::vector<int64_t> times) {
  Grid grid;
  grid.kind = GridKind::kCustom;
  grid.horizon = horizon;
  grid.times = std::move(times);
  std::vector<std::string> violations = ValidateGrid(grid);
  if (!violations.empty()) {
    std::string message = "invalid grid:";
    for (const std::string& v : violations) absl::StrAppend(&message, " ", v, ";");
    message.pop_back();
    return absl::InvalidArgumentError(message);
  }
  return grid;
}

std::vector<std::string> ValidateGrid(const Grid& grid) {
  std::vector<std::string> violations;
  const auto& t = grid.times;
  if (grid.horizon < 1) {
    violations.push_back(
        absl::StrCat("horizon T = ", grid.horizon, " must be positive"));
  }
  if (t.empty()) {
    violations.push_back("grid has no decision times");
    return violations;
  }
  if (t.size() < 2) {
    violations.push_back(
        absl::StrCat("grid needs at least 2 batches, has ", t.size()));
  }
  if (t.front() <= 0) {
    violations.push_back(
        absl::StrCat("t_1 = ", t.front(), " must be positive"));
  }
  for (size_t i = 1; i < t.size(); ++i) {
    if (t[i] <= t[i - 1]) {
      violations.push_back(absl::StrCat("not strictly increasing: t_", i + 1,
                                        " = ", t[i], " <= t_", i, " = ",
                                        t[i - 1]));
    }
  }
  if (t.back() != grid.horizon) {
    violations.push_back(absl::StrCat("t_M = ", t.back(),
                                      " differs from horizon T = ",
                                      grid.horizon));
  }
  for (size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] % 2 != 0) {
      violations.push_back(absl::StrCat("t_", i + 1, " = ", t[i], " is odd"));
    }
  }
  return violations;
}

}  // namespace batchbandit
