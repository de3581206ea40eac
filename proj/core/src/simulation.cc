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

#include "batchbandit/simulation.h"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "batchbandit/parallel.h"
#include "batchbandit/rng.h"

namespace batchbandit {
namespace {

struct Cell {
  std::string policy;
  std::string grid_kind;
  std::optional<Grid> grid;  // ETC only.
  int64_t horizon = 0;
  uint64_t stream_base = 0;
};

struct RepResult {
  absl::Status status;
  double gap = 0.0;
  int64_t suboptimal_pulls = 0;
  double realized_regret = 0.0;
  double switches = 0.0;
  double batches = 0.0;
  bool test_commit = false;
  std::optional<int64_t> commit_time;
};

uint64_t StreamBase(absl::string_view policy, absl::string_view grid_kind,
                    int64_t horizon) {
  return HashCombine(HashLabel(absl::StrCat(policy, "/", grid_kind)),
                     static_cast<uint64_t>(horizon));
}

RepResult FromTrajectory(const Trajectory& trajectory) {
  RepResult result;
  result.gap = trajectory.gap;
  result.suboptimal_pulls = trajectory.suboptimal_pulls;
  result.realized_regret = trajectory.realized_regret;
  result.switches = static_cast<double>(trajectory.switches);
  result.batches = static_cast<double>(trajectory.num_batches());
  result.test_commit = trajectory.commit_reason == CommitReason::kTest;
  result.commit_time = trajectory.commit_time;
  return result;
}

// Mean and standard error of the pseudo-regret gap * pulls. Pull counts are
// aggregated exactly so that a deterministic cell reports zero spread.
std::pair<double, double> RegretMeanAndStdError(
    const std::vector<int64_t>& pulls, double gap) {
  const int64_t n = static_cast<int64_t>(pulls.size());
  int64_t sum = 0;
  for (int64_t x : pulls) sum += x;
  const long double mean = static_cast<long double>(sum) / n;
  if (n < 2) return {gap * static_cast<double>(mean), 0.0};
  long double ss = 0.0L;
  for (int64_t x : pulls) {
    const long double d = static_cast<long double>(x) * n - sum;
    ss += d * d;
  }
  const long double variance = ss / n / n / (n - 1);
  return {gap * static_cast<double>(mean),
          gap * static_cast<double>(std::sqrt(variance / n))};
}

}  // namespace

absl::string_view BaselineName(Baseline baseline) {
  switch (baseline) {
    case Baseline::kUcb2:
      return "ucb2";
  }
  return "unknown";
}

absl::StatusOr<Baseline> ParseBaseline(absl::string_view name) {
  if (name == "ucb2") return Baseline::kUcb2;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown baseline '", name, "' (expected ucb2)"));
}

absl::Status ValidateSimConfig(const SimConfig& config) {
  if (config.horizons.empty()) {
    return absl::InvalidArgumentError("T_list: must not be empty");
  }
  for (size_t i = 0; i < config.horizons.size(); ++i) {
    if (config.horizons[i] < 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          "T_list[", i, "]: horizon must be >= 2, got ", config.horizons[i]));
    }
    if (i > 0 && config.horizons[i] < config.horizons[i - 1]) {
      return absl::InvalidArgumentError(
          absl::StrCat("T_list[", i, "]: horizons must be sorted ascending"));
    }
  }
  if (config.num_batches < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("M: must be >= 2, got ", config.num_batches));
  }
  if (config.grid_kinds.empty() && config.baselines.empty()) {
    return absl::InvalidArgumentError(
        "grid_kinds/baselines: at least one policy is required");
  }
  for (size_t i = 0; i < config.grid_kinds.size(); ++i) {
    if (config.grid_kinds[i] == GridKind::kCustom) {
      return absl::InvalidArgumentError(absl::StrCat(
          "grid_kinds[", i, "]: custom grids cannot be simulated from config"));
    }
  }
  if (config.replications < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "replications: must be >= 1, got ", config.replications));
  }
  if (!config.baselines.empty() &&
      !(config.alpha > 0.0 && config.alpha < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha: must lie in (0, 1), got ", config.alpha));
  }
  absl::StatusOr<BanditInstance> instance =
      MakeInstance(config.family, config.mu[0], config.mu[1]);
  if (!instance.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat("mu_pair/family: ", instance.status().message()));
  }
  return absl::OkStatus();
}

SimConfig SweepPreset() {
  SimConfig config;
  config.horizons = {5000, 10000, 20000, 30000, 40000};
  config.num_batches = 5;
  config.grid_kinds = {GridKind::kArithmetic, GridKind::kGeometric,
                       GridKind::kMinimax};
  config.baselines = {Baseline::kUcb2};
  config.family = RewardFamily::Gaussian();
  config.mu = {0.5, 0.6};
  config.replications = 100;
  config.master_seed = 0;
  config.mode = BatchMode::kShuffled;
  config.alpha = kDefaultUcb2Alpha;
  return config;
}

absl::StatusOr<RegretTable> Simulate(const SimConfig& config,
                                     const SimOptions& options) {
  if (absl::Status s = ValidateSimConfig(config); !s.ok()) return s;
  const BanditInstance instance =
      *MakeInstance(config.family, config.mu[0], config.mu[1]);

  std::vector<Cell> cells;
  for (size_t k = 0; k < config.grid_kinds.size(); ++k) {
    const GridKind kind = config.grid_kinds[k];
    for (size_t j = 0; j < config.horizons.size(); ++j) {
      const int64_t horizon = config.horizons[j];
      absl::StatusOr<Grid> grid = MakeGrid(kind, horizon, config.num_batches);
      if (!grid.ok()) {
        return absl::Status(
            grid.status().code(),
            absl::StrCat("grid_kinds[", k, "] (", GridKindName(kind),
                         ") at T_list[", j, "] = ", horizon, ": ",
                         grid.status().message()));
      }
      const std::string kind_name(GridKindName(kind));
      cells.push_back({"etc", kind_name, *std::move(grid), horizon,
                       StreamBase("etc", kind_name, horizon)});
    }
  }
  for (Baseline baseline : config.baselines) {
    const std::string name(BaselineName(baseline));
    for (int64_t horizon : config.horizons) {
      cells.push_back(
          {name, "none", std::nullopt, horizon, StreamBase(name, "none", horizon)});
    }
  }

  const int64_t reps = config.replications;
  std::vector<RepResult> results(cells.size() * reps);
  ParallelFor(static_cast<int64_t>(results.size()),
              ResolveThreads(options.threads), [&](int64_t index) {
                const Cell& cell = cells[index / reps];
                const int64_t rep = index % reps;
                RngStream rng = MakeRngStream(
                    config.master_seed,
                    HashCombine(cell.stream_base, static_cast<uint64_t>(rep)));
                absl::StatusOr<Trajectory> trajectory =
                    cell.grid ? RunEtc(*cell.grid, instance, rng, config.mode)
                              : RunUcb2({config.alpha, cell.horizon}, instance,
                                        rng);
                if (!trajectory.ok()) {
                  results[index].status = trajectory.status();
                  return;
                }
                results[index] = FromTrajectory(*trajectory);
              });

  RegretTable table;
  table.include_realized = options.include_realized;
  for (size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    std::vector<int64_t> pulls;
    double realized = 0.0;
    double switches = 0.0, batches = 0.0, commit_times = 0.0;
    int64_t test_commits = 0, commits = 0;
    for (int64_t r = 0; r < reps; ++r) {
      const RepResult& result = results[c * reps + r];
      if (!result.status.ok()) return result.status;
      pulls.push_back(result.suboptimal_pulls);
      realized += result.realized_regret;
      switches += result.switches;
      batches += result.batches;
      if (result.test_commit) ++test_commits;
      if (result.commit_time) {
        ++commits;
        commit_times += static_cast<double>(*result.commit_time);
      }
    }
    const double n = static_cast<double>(reps);
    const auto [mean, std_error] =
        RegretMeanAndStdError(pulls, instance.gap);

    RegretRow row;
    row.policy = cell.policy;
    row.grid_kind = cell.grid_kind;
    row.horizon = cell.horizon;
    row.num_batches = cell.grid ? cell.grid->num_batches()
                                : static_cast<int>(std::lround(batches / n));
    row.delta = instance.gap;
    row.family = std::string(FamilyName(config.family.kind));
    row.replications = reps;
    row.seed = config.master_seed;
    row.mean_pseudo_regret = mean;
    row.std_error = std_error;
    row.mean_switches = switches / n;
    row.commit_rate = static_cast<double>(test_commits) / n;
    if (commits > 0) {
      row.mean_commit_time = commit_times / static_cast<double>(commits);
    }
    if (options.include_realized) {
      row.mean_realized_regret = realized / n;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

absl::StatusOr<EmpiricalCurve> SimulateEtcCurve(
    const Grid& grid, const RewardFamily& family, double base_mean,
    const std::vector<double>& mesh, int64_t replications, uint64_t seed,
    BatchMode mode, int threads) {
  if (replications < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "replications: must be >= 1, got ", replications));
  }
  std::vector<BanditInstance> instances;
  for (double gap : mesh) {
    absl::StatusOr<BanditInstance> instance =
        MakeInstance(family, base_mean + gap, base_mean);
    if (!instance.ok()) return instance.status();
    instances.push_back(*instance);
  }

  const uint64_t base =
      HashLabel(absl::StrCat("curve/", GridKindName(grid.kind)));
  std::vector<RepResult> results(mesh.size() * replications);
  ParallelFor(static_cast<int64_t>(results.size()), ResolveThreads(threads),
              [&](int64_t index) {
                const int64_t point = index / replications;
                const int64_t rep = index % replications;
                RngStream rng = MakeRngStream(
                    seed, HashCombine(HashCombine(base, point), rep));
                absl::StatusOr<Trajectory> trajectory =
                    RunEtc(grid, instances[point], rng, mode);
                if (!trajectory.ok()) {
                  results[index].status = trajectory.status();
                  return;
                }
                results[index] = FromTrajectory(*trajectory);
              });

  EmpiricalCurve out;
  out.curve.delta_mesh = mesh;
  out.curve.horizon = grid.horizon;
  out.curve.num_batches = grid.num_batches();
  out.curve.grid_kind = grid.kind;
  out.curve.bound_kind = BoundKind::kEmpirical;
  for (size_t p = 0; p < mesh.size(); ++p) {
    std::vector<int64_t> pulls;
    pulls.reserve(replications);
    for (int64_t r = 0; r < replications; ++r) {
      const RepResult& result = results[p * replications + r];
      if (!result.status.ok()) return result.status;
      pulls.push_back(result.suboptimal_pulls);
    }
    const auto [mean, std_error] =
        RegretMeanAndStdError(pulls, results[p * replications].gap);
    out.curve.values.push_back(mean);
    out.std_errors.push_back(std_error);
  }
  return out;
}

}  // namespace batchbandit
