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

#include "batchbandit/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/string_view.h"
#include "json.hpp"

namespace batchbandit {
namespace {

using Json = nlohmann::ordered_json;

constexpr absl::string_view kRegretColumns[] = {
    "policy",        "grid_kind",
    "T",             "M",
    "delta",         "family",
    "replications",  "seed",
    "mean_pseudo_regret", "std_error",
    "mean_switches", "commit_rate",
    "mean_commit_time",
};
constexpr absl::string_view kRealizedColumn = "mean_realized_regret";

std::string FormatOptional(const std::optional<double>& value) {
  return value ? FormatDouble(*value) : std::string();
}

Json OptionalJson(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

absl::StatusOr<Json> Parse(absl::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("malformed JSON: ", e.what()));
  }
}

// Converts nlohmann type errors raised by `fn` into InvalidArgument.
template <typename Fn>
auto Guard(absl::string_view what, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat(what, ": ", e.what()));
  }
}

std::optional<double> OptionalDouble(const Json& record, const char* key) {
  if (!record.contains(key) || record.at(key).is_null()) return std::nullopt;
  return record.at(key).get<double>();
}

Json GridJson(const Grid& grid) {
  Json j;
  j["kind"] = std::string(GridKindName(grid.kind));
  j["T"] = grid.horizon;
  j["M"] = grid.num_batches();
  j["a"] = grid.a ? Json(*grid.a) : Json(nullptr);
  j["times"] = grid.times;
  j["truncated"] = grid.truncated;
  return j;
}

}  // namespace

absl::StatusOr<Format> ParseFormat(absl::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown format '", name, "' (expected csv or json)"));
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string RegretTableToCsv(const RegretTable& table) {
  std::string out = absl::StrJoin(kRegretColumns, ",");
  if (table.include_realized) absl::StrAppend(&out, ",", kRealizedColumn);
  out += "\n";
  for (const RegretRow& row : table.rows) {
    absl::StrAppend(&out, row.policy, ",", row.grid_kind, ",", row.horizon,
                    ",", row.num_batches, ",", FormatDouble(row.delta), ",",
                    row.family, ",", row.replications, ",", row.seed, ",",
                    FormatDouble(row.mean_pseudo_regret), ",",
                    FormatDouble(row.std_error), ",",
                    FormatDouble(row.mean_switches), ",",
                    FormatDouble(row.commit_rate), ",",
                    FormatOptional(row.mean_commit_time));
    if (table.include_realized) {
      absl::StrAppend(&out, ",", FormatOptional(row.mean_realized_regret));
    }
    out += "\n";
  }
  return out;
}

std::string RegretTableToJson(const RegretTable& table) {
  Json rows = Json::array();
  for (const RegretRow& row : table.rows) {
    Json j;
    j["policy"] = row.policy;
    j["grid_kind"] = row.grid_kind;
    j["T"] = row.horizon;
    j["M"] = row.num_batches;
    j["delta"] = row.delta;
    j["family"] = row.family;
    j["replications"] = row.replications;
    j["seed"] = row.seed;
    j["mean_pseudo_regret"] = row.mean_pseudo_regret;
    j["std_error"] = row.std_error;
    j["mean_switches"] = row.mean_switches;
    j["commit_rate"] = row.commit_rate;
    j["mean_commit_time"] = OptionalJson(row.mean_commit_time);
    if (table.include_realized) {
      j[std::string(kRealizedColumn)] = OptionalJson(row.mean_realized_regret);
    }
    rows.push_back(std::move(j));
  }
  return rows.dump(2) + "\n";
}

absl::StatusOr<RegretTable> RegretTableFromJson(absl::string_view json) {
  absl::StatusOr<Json> parsed = Parse(json);
  if (!parsed.ok()) return parsed.status();
  if (!parsed->is_array()) {
    return absl::InvalidArgumentError("regret table JSON must be an array");
  }
  return Guard("regret table", [&]() -> absl::StatusOr<RegretTable> {
    RegretTable table;
    for (const Json& j : *parsed) {
      RegretRow row;
      row.policy = j.at("policy").get<std::string>();
      row.grid_kind = j.at("grid_kind").get<std::string>();
      row.horizon = j.at("T").get<int64_t>();
      row.num_batches = j.at("M").get<int>();
      row.delta = j.at("delta").get<double>();
      row.family = j.at("family").get<std::string>();
      row.replications = j.at("replications").get<int64_t>();
      row.seed = j.at("seed").get<uint64_t>();
      row.mean_pseudo_regret = j.at("mean_pseudo_regret").get<double>();
      row.std_error = j.at("std_error").get<double>();
      row.mean_switches = j.at("mean_switches").get<double>();
      row.commit_rate = j.at("commit_rate").get<double>();
      row.mean_commit_time = OptionalDouble(j, "mean_commit_time");
      if (j.contains(kRealizedColumn)) {
        table.include_realized = true;
        row.mean_realized_regret = OptionalDouble(j, "mean_realized_regret");
      }
      table.rows.push_back(std::move(row));
    }
    return table;
  });
}

std::string GridToJson(const Grid& grid) { return GridJson(grid).dump() + "\n"; }

std::string GridToCsv(const Grid& grid) {
  std::string out = "kind,T,M,a,truncated,m,t\n";
  const std::string a = grid.a ? FormatDouble(*grid.a) : std::string();
  for (int m = 1; m <= grid.num_batches(); ++m) {
    absl::StrAppend(&out, GridKindName(grid.kind), ",", grid.horizon, ",",
                    grid.num_batches(), ",", a, ",",
                    grid.truncated ? "true" : "false", ",", m, ",",
                    grid.time(m), "\n");
  }
  return out;
}

absl::StatusOr<Grid> GridFromJson(absl::string_view json) {
  absl::StatusOr<Json> parsed = Parse(json);
  if (!parsed.ok()) return parsed.status();
  absl::StatusOr<Grid> grid = Guard("grid", [&]() -> absl::StatusOr<Grid> {
    const Json& j = *parsed;
    absl::StatusOr<GridKind> kind = ParseGridKind(j.at("kind").get<std::string>());
    if (!kind.ok()) return kind.status();
    Grid grid;
    grid.kind = *kind;
    grid.horizon = j.at("T").get<int64_t>();
    grid.times = j.at("times").get<std::vector<int64_t>>();
    if (j.contains("a") && !j.at("a").is_null()) grid.a = j.at("a").get<double>();
    grid.truncated = j.value("truncated", false);
    if (j.contains("M") && j.at("M").get<int>() != grid.num_batches()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "grid M = ", j.at("M").get<int>(), " but ", grid.num_batches(),
          " times were given"));
    }
    return grid;
  });
  if (!grid.ok()) return grid.status();
  if (std::vector<std::string> violations = ValidateGrid(*grid);
      !violations.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid grid: ", absl::StrJoin(violations, "; ")));
  }
  return grid;
}

std::string BoundCurvesToCsv(const std::vector<BoundCurve>& curves) {
  std::string out = "delta,value,bound_kind,grid_kind,T,M\n";
  for (const BoundCurve& curve : curves) {
    for (size_t i = 0; i < curve.delta_mesh.size(); ++i) {
      absl::StrAppend(&out, FormatDouble(curve.delta_mesh[i]), ",",
                      FormatDouble(curve.values[i]), ",",
                      BoundKindName(curve.bound_kind), ",",
                      GridKindName(curve.grid_kind), ",", curve.horizon, ",",
                      curve.num_batches, "\n");
    }
  }
  return out;
}

std::string BoundCurvesToJson(const std::vector<BoundCurve>& curves) {
  Json out = Json::array();
  for (const BoundCurve& curve : curves) {
    for (size_t i = 0; i < curve.delta_mesh.size(); ++i) {
      Json j;
      j["delta"] = curve.delta_mesh[i];
      j["value"] = curve.values[i];
      j["bound_kind"] = std::string(BoundKindName(curve.bound_kind));
      j["grid_kind"] = std::string(GridKindName(curve.grid_kind));
      j["T"] = curve.horizon;
      j["M"] = curve.num_batches;
      out.push_back(std::move(j));
    }
  }
  return out.dump(2) + "\n";
}

std::string TrajectoryToJson(const Trajectory& trajectory, bool include_arms) {
  Json j;
  j["T"] = trajectory.horizon();
  j["gap"] = trajectory.gap;
  j["pseudo_regret"] = trajectory.pseudo_regret;
  j["realized_regret"] = trajectory.realized_regret;
  j["suboptimal_pulls"] = trajectory.suboptimal_pulls;
  j["switches"] = trajectory.switches;
  j["commit_time"] = trajectory.commit_time ? Json(*trajectory.commit_time)
                                            : Json(nullptr);
  j["committed_arm"] = trajectory.committed_arm
                           ? Json(ArmNumber(*trajectory.committed_arm))
                           : Json(nullptr);
  j["commit_reason"] = std::string(CommitReasonName(trajectory.commit_reason));
  j["batch_ends"] = trajectory.batch_ends;
  if (include_arms) {
    std::vector<int> arms;
    arms.reserve(trajectory.arms.size());
    for (Arm arm : trajectory.arms) arms.push_back(ArmNumber(arm));
    j["arms"] = std::move(arms);
  }
  return j.dump() + "\n";
}

std::string SimConfigToJson(const SimConfig& config) {
  Json j;
  j["T_list"] = config.horizons;
  j["M"] = config.num_batches;
  std::vector<std::string> grids, baselines;
  for (GridKind kind : config.grid_kinds) {
    grids.emplace_back(GridKindName(kind));
  }
  for (Baseline b : config.baselines) baselines.emplace_back(BaselineName(b));
  j["grid_kinds"] = grids;
  j["baselines"] = baselines;
  j["family"] = {{"kind", std::string(FamilyName(config.family.kind))},
                 {"dof", config.family.dof}};
  j["mu_pair"] = {config.mu[0], config.mu[1]};
  j["replications"] = config.replications;
  j["master_seed"] = config.master_seed;
  j["mode"] = std::string(BatchModeName(config.mode));
  j["alpha"] = config.alpha;
  return j.dump(2) + "\n";
}

absl::StatusOr<SimConfig> SimConfigFromJson(absl::string_view json) {
  absl::StatusOr<Json> parsed = Parse(json);
  if (!parsed.ok()) return parsed.status();
  if (!parsed->is_object()) {
    return absl::InvalidArgumentError("config must be a JSON object");
  }
  static const std::set<std::string> kKeys = {
      "T_list",   "M",       "grid_kinds",   "baselines",   "family",
      "mu_pair",  "replications", "master_seed", "mode",   "alpha"};
  for (const auto& [key, value] : parsed->items()) {
    if (!kKeys.contains(key)) {
      return absl::InvalidArgumentError(
          absl::StrCat("config: unknown field '", key, "'"));
    }
  }
  if (!parsed->contains("T_list")) {
    return absl::InvalidArgumentError("config: missing required field 'T_list'");
  }
  return Guard("config", [&]() -> absl::StatusOr<SimConfig> {
    const Json& j = *parsed;
    SimConfig config;
    config.grid_kinds.clear();
    config.horizons = j.at("T_list").get<std::vector<int64_t>>();
    config.num_batches = j.value("M", config.num_batches);
    if (j.contains("grid_kinds")) {
      const auto names = j.at("grid_kinds").get<std::vector<std::string>>();
      for (size_t i = 0; i < names.size(); ++i) {
        absl::StatusOr<GridKind> kind = ParseGridKind(names[i]);
        if (!kind.ok()) {
          return absl::InvalidArgumentError(absl::StrCat(
              "config.grid_kinds[", i, "]: ", kind.status().message()));
        }
        config.grid_kinds.push_back(*kind);
      }
    }
    if (j.contains("baselines")) {
      const auto names = j.at("baselines").get<std::vector<std::string>>();
      for (size_t i = 0; i < names.size(); ++i) {
        absl::StatusOr<Baseline> baseline = ParseBaseline(names[i]);
        if (!baseline.ok()) {
          return absl::InvalidArgumentError(absl::StrCat(
              "config.baselines[", i, "]: ", baseline.status().message()));
        }
        config.baselines.push_back(*baseline);
      }
    }
    if (j.contains("family")) {
      const Json& family = j.at("family");
      const std::string name = family.is_string()
                                   ? family.get<std::string>()
                                   : family.at("kind").get<std::string>();
      absl::StatusOr<FamilyKind> kind = ParseFamilyKind(name);
      if (!kind.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("config.family: ", kind.status().message()));
      }
      config.family.kind = *kind;
      if (family.is_object()) {
        config.family.dof = family.value("dof", kDefaultStudentTDof);
      }
    }
    if (j.contains("mu_pair")) {
      const auto mu = j.at("mu_pair").get<std::vector<double>>();
      if (mu.size() != 2) {
        return absl::InvalidArgumentError(absl::StrCat(
            "config.mu_pair: expected 2 means, got ", mu.size()));
      }
      config.mu = {mu[0], mu[1]};
    }
    config.replications = j.value("replications", config.replications);
    config.master_seed = j.value("master_seed", config.master_seed);
    if (j.contains("mode")) {
      absl::StatusOr<BatchMode> mode =
          ParseBatchMode(j.at("mode").get<std::string>());
      if (!mode.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("config.mode: ", mode.status().message()));
      }
      config.mode = *mode;
    }
    config.alpha = j.value("alpha", config.alpha);
    return config;
  });
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

absl::Status WriteFile(const std::string& path, absl::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("cannot open '", path, "' for writing"));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) {
    return absl::DataLossError(absl::StrCat("failed writing '", path, "'"));
  }
  return absl::OkStatus();
}

absl::Status Emit(const RegretTable& table, Format format,
                  const std::string& path) {
  return WriteFile(path, format == Format::kCsv ? RegretTableToCsv(table)
                                                : RegretTableToJson(table));
}

absl::Status Emit(const Grid& grid, Format format, const std::string& path) {
  return WriteFile(path, format == Format::kCsv ? GridToCsv(grid)
                                                : GridToJson(grid));
}

absl::Status Emit(const std::vector<BoundCurve>& curves, Format format,
                  const std::string& path) {
  return WriteFile(path, format == Format::kCsv ? BoundCurvesToCsv(curves)
                                                : BoundCurvesToJson(curves));
}

}  // namespace batchbandit
