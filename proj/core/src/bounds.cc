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

#include "batchbandit/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace batchbandit {
namespace {

// gap >= 16 sqrt(max(0, log(2T / theta)) / theta), squared.
bool Separates(double gap, int64_t theta, int64_t horizon) {
  const double log_term =
      std::max(0.0, std::log(2.0 * static_cast<double>(horizon) /
                             static_cast<double>(theta)));
  return gap * gap * static_cast<double>(theta) >= 256.0 * log_term;
}

absl::Status ValidateMesh(const std::vector<double>& mesh) {
  if (mesh.empty()) return absl::InvalidArgumentError("gap mesh is empty");
  for (size_t i = 0; i < mesh.size(); ++i) {
    if (!(mesh[i] > 0.0 && mesh[i] <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("gap mesh point ", mesh[i], " outside (0, 1]"));
    }
    if (i > 0 && !(mesh[i] > mesh[i - 1])) {
      return absl::InvalidArgumentError(
          absl::StrCat("gap mesh not strictly increasing at index ", i));
    }
  }
  return absl::OkStatus();
}

}  // namespace

int64_t Tau(double gap, int64_t horizon) {
  // Separates(2T) always holds: the log term vanishes.
  int64_t lo = 1;
  int64_t hi = 2 * horizon;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (Separates(gap, mid, horizon)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return std::min(horizon, lo);
}

int GridIndex(double gap, const Grid& grid) {
  const int last_interior = grid.num_batches() - 1;
  const int64_t tau = Tau(gap, grid.horizon);
  for (int m = 1; m <= last_interior; ++m) {
    if (grid.time(m) >= tau) return m;
  }
  return last_interior;
}

double EtcRegretUpper(double gap, const Grid& grid) {
  const int last_interior = grid.num_batches() - 1;
  const int m = GridIndex(gap, grid);
  double bound = 9.0 * gap * static_cast<double>(grid.time(m));
  if (m == last_interior) {
    const double t_last = static_cast<double>(grid.time(last_interior));
    bound += static_cast<double>(grid.horizon) * gap *
             std::exp(-t_last * gap * gap / 16.0);
  }
  return bound;
}

double LowerBound(double gap, const Grid& grid) {
  double sum = 0.0;
  for (int j = 1; j <= grid.num_batches(); ++j) {
    sum += static_cast<double>(grid.time(j)) / 4.0 *
           std::exp(-static_cast<double>(grid.time(j - 1)) * gap * gap / 2.0);
  }
  return gap * sum;
}

absl::StatusOr<BatchRates> LowerBoundRates(int64_t horizon, int num_batches) {
  if (num_batches < 2 || num_batches > horizon) {
    return absl::InvalidArgumentError(absl::StrCat(
        "M = ", num_batches, " outside [2, T] for T = ", horizon));
  }
  const long double T = horizon;
  const long double M = num_batches;
  // 1 / (2 - 2^{1-M}) = 2^{M-1} / (2^M - 1)
  const long double max_exponent = std::ldexp(1.0L, num_batches - 1) /
                                   (std::ldexp(1.0L, num_batches) - 1.0L);
  BatchRates rates;
  rates.excess = static_cast<double>(T / M);
  rates.competitive_ratio = static_cast<double>(std::pow(T, 1.0L / M));
  rates.maximum = static_cast<double>(std::pow(T, max_exponent));
  return rates;
}

double OracleRate(double gap, int64_t horizon) {
  if (gap <= 0.0) return std::numeric_limits<double>::infinity();
  return Blog(static_cast<double>(horizon) * gap * gap) / gap;
}

absl::string_view BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kEtcUpper:
      return "prop1_upper";
    case BoundKind::kLowerBound:
      return "lb_formula";
    case BoundKind::kEmpirical:
      return "empirical";
  }
  return "unknown";
}

std::vector<double> LogMesh(int size, double low) {
  if (size <= 0) return {};
  if (size == 1) return {1.0};
  std::vector<double> mesh(size);
  const double log_low = std::log(low);
  for (int i = 0; i < size; ++i) {
    mesh[i] = std::exp(log_low * (1.0 - static_cast<double>(i) / (size - 1)));
  }
  mesh.back() = 1.0;
  return mesh;
}

absl::StatusOr<BoundCurve> MakeBoundCurve(const Grid& grid, BoundKind kind,
                                          const std::vector<double>& mesh) {
  if (absl::Status s = ValidateMesh(mesh); !s.ok()) return s;
  if (kind == BoundKind::kEmpirical) {
    return absl::InvalidArgumentError(
        "empirical curves come from simulation, not from a closed form");
  }
  BoundCurve curve;
  curve.delta_mesh = mesh;
  curve.values.reserve(mesh.size());
  curve.horizon = grid.horizon;
  curve.num_batches = grid.num_batches();
  curve.grid_kind = grid.kind;
  curve.bound_kind = kind;
  for (double gap : mesh) {
    curve.values.push_back(kind == BoundKind::kEtcUpper
                               ? EtcRegretUpper(gap, grid)
                               : LowerBound(gap, grid));
  }
  return curve;
}

absl::string_view FunctionalKindName(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::kExcess:
      return "excess";
    case FunctionalKind::kCompetitiveRatio:
      return "competitive_ratio";
    case FunctionalKind::kMaximum:
      return "maximum";
  }
  return "unknown";
}

absl::StatusOr<double> EvaluateFunctional(const BoundCurve& curve,
                                          const Functional& functional) {
  if (curve.delta_mesh.empty() ||
      curve.delta_mesh.size() != curve.values.size()) {
    return absl::InvalidArgumentError(
        "functional needs a non-empty curve with one value per mesh point");
  }
  if (functional.kind == FunctionalKind::kExcess && !(functional.c > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("excess regret needs C > 0, got ", functional.c));
  }
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < curve.values.size(); ++i) {
    const double regret = curve.values[i];
    const double oracle = OracleRate(curve.delta_mesh[i], curve.horizon);
    double value = regret;
    if (functional.kind == FunctionalKind::kExcess) {
      value = regret - functional.c * oracle;
    } else if (functional.kind == FunctionalKind::kCompetitiveRatio) {
      value = regret / oracle;
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace batchbandit
