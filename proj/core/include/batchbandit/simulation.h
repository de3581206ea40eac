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

#ifndef BATCHBANDIT_SIMULATION_H_
#define BATCHBANDIT_SIMULATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "batchbandit/bounds.h"
#include "batchbandit/etc_policy.h"
#include "batchbandit/grid.h"
#include "batchbandit/reward.h"
#include "batchbandit/ucb2.h"

namespace batchbandit {

enum class Baseline { kUcb2 };
absl::string_view BaselineName(Baseline baseline);
absl::StatusOr<Baseline> ParseBaseline(absl::string_view name);

struct SimConfig {
  std::vector<int64_t> horizons;  // T_list, ascending.
  int num_batches = 5;            // M for every ETC grid.
  std::vector<GridKind> grid_kinds;
  std::vector<Baseline> baselines;
  RewardFamily family;
  std::array<double, 2> mu = {0.5, 0.6};
  int64_t replications = 100;
  uint64_t master_seed = 0;
  BatchMode mode = BatchMode::kShuffled;
  double alpha = kDefaultUcb2Alpha;
};

absl::Status ValidateSimConfig(const SimConfig& config);

// Gaussian arms at (0.5, 0.6), M = 5, arithmetic/geometric/minimax grids and
// UCB2 over T in {5000, 10000, 20000, 30000, 40000}, 100 replications.
SimConfig SweepPreset();

// One aggregated cell. UCB2 rows use grid_kind "none" and report the mean
// implied batch count (rounded) as num_batches.
struct RegretRow {
  std::string policy;     // "etc" or "ucb2".
  std::string grid_kind;
  int64_t horizon = 0;
  int num_batches = 0;
  double delta = 0.0;
  std::string family;
  int64_t replications = 0;
  uint64_t seed = 0;
  double mean_pseudo_regret = 0.0;
  double std_error = 0.0;
  double mean_switches = 0.0;
  // Fraction of runs the confidence test committed before the last batch.
  double commit_rate = 0.0;
  // Mean commit time over runs that committed (test or go-for-broke).
  std::optional<double> mean_commit_time;
  std::optional<double> mean_realized_regret;

  friend bool operator==(const RegretRow&, const RegretRow&) = default;
};

struct RegretTable {
  std::vector<RegretRow> rows;
  // Adds the mean_realized_regret column to emitted files.
  bool include_realized = false;

  friend bool operator==(const RegretTable&, const RegretTable&) = default;
};

struct SimOptions {
  int threads = 0;  // 0: BATCHBANDIT_THREADS or hardware concurrency.
  bool include_realized = false;
};

// Rows are ordered by policy (grid kinds, then baselines, in config order)
// and then by horizon. Every (policy, grid kind, T, replication) gets its
// own stream id, so output depends only on the config and master seed.
absl::StatusOr<RegretTable> Simulate(const SimConfig& config,
                                     const SimOptions& options = {});

struct EmpiricalCurve {
  BoundCurve curve;  // bound_kind == kEmpirical, values = mean pseudo-regret.
  std::vector<double> std_errors;
};

// Mean ETC pseudo-regret over `grid` at each gap of `mesh`, with arm means
// (base_mean + gap, base_mean).
absl::StatusOr<EmpiricalCurve> SimulateEtcCurve(
    const Grid& grid, const RewardFamily& family, double base_mean,
    const std::vector<double>& mesh, int64_t replications, uint64_t seed,
    BatchMode mode = BatchMode::kShuffled, int threads = 0);

}  // namespace batchbandit

#endif  // BATCHBANDIT_SIMULATION_H_
