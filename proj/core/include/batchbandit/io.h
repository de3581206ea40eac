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

#ifndef BATCHBANDIT_IO_H_
#define BATCHBANDIT_IO_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "batchbandit/bounds.h"
#include "batchbandit/grid.h"
#include "batchbandit/simulation.h"
#include "batchbandit/trajectory.h"

namespace batchbandit {

enum class Format { kCsv, kJson };
absl::StatusOr<Format> ParseFormat(absl::string_view name);

// Shortest decimal string that round-trips to the same double.
std::string FormatDouble(double value);

// Regret tables. The CSV header lists the RegretRow fields in declaration
// order (T and M for horizon and num_batches); mean_realized_regret is
// appended only when the table includes it. Absent optionals are empty CSV
// fields and JSON nulls.
std::string RegretTableToCsv(const RegretTable& table);
std::string RegretTableToJson(const RegretTable& table);
absl::StatusOr<RegretTable> RegretTableFromJson(absl::string_view json);

// Grids: {"kind", "T", "M", "a", "times", "truncated"}.
std::string GridToJson(const Grid& grid);
std::string GridToCsv(const Grid& grid);
absl::StatusOr<Grid> GridFromJson(absl::string_view json);

// Bound curves: CSV columns delta, value, bound_kind, grid_kind, T, M.
std::string BoundCurvesToCsv(const std::vector<BoundCurve>& curves);
std::string BoundCurvesToJson(const std::vector<BoundCurve>& curves);

// Summary record of a run; the per-round arm sequence is included only on
// request since it has T entries.
std::string TrajectoryToJson(const Trajectory& trajectory,
                             bool include_arms = false);

// SimConfig files use exactly the SimConfig fields: T_list, M, grid_kinds,
// baselines, family ({"kind", "dof"}), mu_pair, replications, master_seed,
// mode, alpha. Unknown keys are rejected; missing keys keep their defaults,
// except T_list which is required.
std::string SimConfigToJson(const SimConfig& config);
absl::StatusOr<SimConfig> SimConfigFromJson(absl::string_view json);

absl::StatusOr<std::string> ReadFile(const std::string& path);
// Writes `contents` verbatim; failures name the path.
absl::Status WriteFile(const std::string& path, absl::string_view contents);

absl::Status Emit(const RegretTable& table, Format format,
                  const std::string& path);
absl::Status Emit(const Grid& grid, Format format, const std::string& path);
absl::Status Emit(const std::vector<BoundCurve>& curves, Format format,
                  const std::string& path);

}  // namespace batchbandit

#endif  // BATCHBANDIT_IO_H_
