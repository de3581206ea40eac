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

#include "cli.h"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "batchbandit/bounds.h"
#include "batchbandit/concentration.h"
#include "batchbandit/grid.h"
#include "batchbandit/io.h"
#include "batchbandit/simulation.h"
#include "json.hpp"

namespace batchbandit {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalFlags {
  uint64_t seed = 0;
  bool seed_set = false;
  std::string out_path;
  std::string format_name = "csv";
  int threads = 0;
  Format format = Format::kCsv;
};

// Thrown from subcommand bodies to surface a bad configuration as exit 1.
struct ConfigError {
  absl::Status status;
};

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  if (!value.ok()) throw ConfigError{value.status()};
  return *std::move(value);
}

void Check(const absl::Status& status) {
  if (!status.ok()) throw ConfigError{status};
}

std::vector<GridKind> ParseGridKinds(const std::vector<std::string>& names) {
  std::vector<GridKind> kinds;
  for (const std::string& name : names) kinds.push_back(Unwrap(ParseGridKind(name)));
  return kinds;
}

void WarnAboutGrid(const Grid& grid, std::ostream& err) {
  if (grid.kind == GridKind::kMinimax) {
    absl::StatusOr<MinimaxParams> params =
        MinimaxA(grid.horizon, static_cast<int>(grid.times.size()));
    if (params.ok() && !params->condition_ok) {
      err << "warning: minimax grid for T = " << grid.horizon
          << " violates 2^M <= log(2T)/6; guarantees do not apply\n";
    }
  }
  if (grid.truncated) {
    err << "warning: " << GridKindName(grid.kind) << " grid for T = "
        << grid.horizon << " lost colliding points and has "
        << grid.num_batches() << " batches\n";
  }
}

std::string Render(const Json& records, Format format,
                   const std::vector<std::string>& columns) {
  if (format == Format::kJson) return records.dump(2) + "\n";
  std::string text = absl::StrJoin(columns, ",") + "\n";
  for (const Json& record : records) {
    std::vector<std::string> fields;
    for (const std::string& column : columns) {
      const Json& v = record.at(column);
      if (v.is_null()) {
        fields.emplace_back();
      } else if (v.is_string()) {
        fields.push_back(v.get<std::string>());
      } else if (v.is_boolean()) {
        fields.emplace_back(v.get<bool>() ? "true" : "false");
      } else if (v.is_number_float()) {
        fields.push_back(FormatDouble(v.get<double>()));
      } else {
        fields.push_back(v.dump());
      }
    }
    absl::StrAppend(&text, absl::StrJoin(fields, ","), "\n");
  }
  return text;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int Run(int argc, const char* const* argv);

 private:
  void Deliver(const std::string& text) {
    if (flags_.out_path.empty()) {
      out_ << text;
      out_.flush();
    } else {
      Check(WriteFile(flags_.out_path, text));
    }
  }

  void AddGrid(CLI::App& app);
  void AddSimulate(CLI::App& app);
  void AddBounds(CLI::App& app);
  void AddVerify(CLI::App& app);
  void AddSweep(CLI::App& app);

  void Simulated(SimConfig config, bool realized);

  std::ostream& out_;
  std::ostream& err_;
  GlobalFlags flags_;
  std::function<int()> action_;
};

void Cli::AddGrid(CLI::App& app) {
  auto* sub = app.add_subcommand("grid", "Print the grid for a horizon T");
  sub->fallthrough();
  struct Args {
    std::string kind;
    int64_t horizon = 0;
    int batches = 0;
  };
  auto args = std::make_shared<Args>();
  sub->add_option("--kind", args->kind, "Grid kind")
      ->required()
      ->check(CLI::IsMember({"arithmetic", "geometric", "minimax"}));
  sub->add_option("--T", args->horizon, "Horizon")->required();
  sub->add_option("--M", args->batches, "Number of batches")->required();
  sub->callback([this, args] {
    action_ = [this, args] {
      const Grid grid = Unwrap(
          MakeGrid(Unwrap(ParseGridKind(args->kind)), args->horizon, args->batches));
      WarnAboutGrid(grid, err_);
      Deliver(flags_.format == Format::kCsv ? GridToCsv(grid)
                                            : GridToJson(grid));
      return kExitOk;
    };
  });
}

void Cli::Simulated(SimConfig config, bool realized) {
  if (flags_.seed_set) config.master_seed = flags_.seed;
  Check(ValidateSimConfig(config));
  for (GridKind kind : config.grid_kinds) {
    for (int64_t horizon : config.horizons) {
      absl::StatusOr<Grid> grid =
          MakeGrid(kind, horizon, config.num_batches);
      if (grid.ok()) WarnAboutGrid(*grid, err_);
    }
  }
  SimOptions options;
  options.threads = flags_.threads;
  options.include_realized = realized;
  const RegretTable table = Unwrap(Simulate(config, options));
  Deliver(flags_.format == Format::kCsv ? RegretTableToCsv(table)
                                        : RegretTableToJson(table));
}

void Cli::AddSimulate(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "simulate", "Run a simulation from a JSON config file or from flags");
  sub->fallthrough();
  struct Args {
    std::string config_path;
    std::vector<int64_t> horizons;
    int batches = 5;
    std::vector<std::string> grids = {"arithmetic", "geometric", "minimax"};
    std::vector<std::string> baselines;
    std::string family = "gaussian";
    double dof = kDefaultStudentTDof;
    std::vector<double> mu = {0.5, 0.6};
    int64_t replications = 100;
    std::string mode = "shuffled";
    double alpha = kDefaultUcb2Alpha;
    bool realized = false;
  };
  auto args = std::make_shared<Args>();
  auto* config = sub->add_option("--config", args->config_path,
                                 "SimConfig JSON file");
  const auto flag = [&](CLI::Option* option) {
    option->excludes(config);
    return option;
  };
  flag(sub->add_option("--T", args->horizons, "Horizons, ascending"));
  flag(sub->add_option("--M", args->batches, "Batches per ETC grid")
           ->capture_default_str());
  flag(sub->add_option("--grids", args->grids, "Grid kinds")
           ->check(CLI::IsMember({"arithmetic", "geometric", "minimax"})));
  flag(sub->add_option("--baselines", args->baselines, "Baselines")
           ->check(CLI::IsMember({"ucb2"})));
  flag(sub->add_option("--family", args->family, "Reward family")
           ->check(CLI::IsMember(
               {"gaussian", "bernoulli", "poisson", "student_t"})));
  flag(sub->add_option("--dof", args->dof, "Student-t degrees of freedom"));
  flag(sub->add_option("--mu", args->mu, "Arm means mu1 mu2")->expected(2));
  flag(sub->add_option("--reps", args->replications, "Replications")
           ->capture_default_str());
  flag(sub->add_option("--mode", args->mode, "Within-batch order")
           ->check(CLI::IsMember({"shuffled", "low_switch"})));
  flag(sub->add_option("--alpha", args->alpha, "UCB2 alpha"));
  sub->add_flag("--realized", args->realized,
                "Add the mean realized regret column");
  sub->callback([this, args] {
    action_ = [this, args] {
      SimConfig config;
      if (!args->config_path.empty()) {
        config = Unwrap(SimConfigFromJson(Unwrap(ReadFile(args->config_path))));
      } else {
        if (args->horizons.empty()) {
          throw ConfigError{absl::InvalidArgumentError(
              "simulate needs --config or --T")};
        }
        config.horizons = args->horizons;
        config.num_batches = args->batches;
        config.grid_kinds = ParseGridKinds(args->grids);
        for (const std::string& name : args->baselines) {
          config.baselines.push_back(Unwrap(ParseBaseline(name)));
        }
        config.family.kind = Unwrap(ParseFamilyKind(args->family));
        config.family.dof = args->dof;
        config.mu = {args->mu[0], args->mu[1]};
        config.replications = args->replications;
        config.mode = Unwrap(ParseBatchMode(args->mode));
        config.alpha = args->alpha;
      }
      Simulated(std::move(config), args->realized);
      return kExitOk;
    };
  });
}

void Cli::AddBounds(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "bounds", "Evaluate regret bound curves, functionals and rates");
  sub->fallthrough();
  struct Args {
    int64_t horizon = 0;
    int batches = 0;
    std::vector<std::string> grids = {"arithmetic", "geometric", "minimax"};
    std::vector<std::string> kinds = {"prop1_upper", "lb_formula"};
    int mesh_size = kDefaultMeshSize;
    double mesh_low = kDefaultMeshLow;
    int64_t empirical_reps = 0;
    bool summary = false;
    double c = 1.0;
  };
  auto args = std::make_shared<Args>();
  sub->add_option("--T", args->horizon, "Horizon")->required();
  sub->add_option("--M", args->batches, "Number of batches")->required();
  sub->add_option("--grids", args->grids, "Grid kinds")
      ->check(CLI::IsMember({"arithmetic", "geometric", "minimax"}));
  sub->add_option("--kinds", args->kinds, "Bound kinds")
      ->check(CLI::IsMember({"prop1_upper", "lb_formula"}));
  sub->add_option("--mesh-size", args->mesh_size, "Points in the gap mesh")
      ->capture_default_str();
  sub->add_option("--mesh-low", args->mesh_low, "Smallest gap in the mesh")
      ->capture_default_str();
  sub->add_option("--empirical-reps", args->empirical_reps,
                  "Also simulate Gaussian ETC regret with this many reps");
  sub->add_option("--C", args->c, "Constant of the excess functional")
      ->capture_default_str();
  sub->add_flag("--summary", args->summary,
                "Print functionals and rate lower bounds instead of curves");
  sub->callback([this, args] {
    action_ = [this, args] {
      if (args->mesh_size < 1 || !(args->mesh_low > 0.0) ||
          args->mesh_low > 1.0) {
        throw ConfigError{absl::InvalidArgumentError(
            "mesh needs --mesh-size >= 1 and --mesh-low in (0, 1]")};
      }
      const std::vector<double> mesh = LogMesh(args->mesh_size, args->mesh_low);
      std::vector<BoundCurve> curves;
      for (GridKind kind : ParseGridKinds(args->grids)) {
        const Grid grid = Unwrap(MakeGrid(kind, args->horizon, args->batches));
        WarnAboutGrid(grid, err_);
        for (const std::string& name : args->kinds) {
          const BoundKind bound = name == "prop1_upper" ? BoundKind::kEtcUpper
                                                        : BoundKind::kLowerBound;
          curves.push_back(Unwrap(MakeBoundCurve(grid, bound, mesh)));
        }
        if (args->empirical_reps > 0) {
          curves.push_back(Unwrap(SimulateEtcCurve(
                                      grid, RewardFamily::Gaussian(), 0.0,
                                      mesh, args->empirical_reps, flags_.seed,
                                      BatchMode::kShuffled, flags_.threads))
                               .curve);
        }
      }
      if (!args->summary) {
        Deliver(flags_.format == Format::kCsv ? BoundCurvesToCsv(curves)
                                              : BoundCurvesToJson(curves));
        return kExitOk;
      }
      Json records = Json::array();
      const auto add = [&](const std::string& quantity, Json grid_kind,
                           Json bound_kind, double value) {
        Json r;
        r["quantity"] = quantity;
        r["grid_kind"] = std::move(grid_kind);
        r["bound_kind"] = std::move(bound_kind);
        r["T"] = args->horizon;
        r["M"] = args->batches;
        r["value"] = value;
        records.push_back(std::move(r));
      };
      for (const BoundCurve& curve : curves) {
        for (FunctionalKind kind :
             {FunctionalKind::kExcess, FunctionalKind::kCompetitiveRatio,
              FunctionalKind::kMaximum}) {
          const double value =
              Unwrap(EvaluateFunctional(curve, Functional{kind, args->c}));
          add(std::string(FunctionalKindName(kind)),
              std::string(GridKindName(curve.grid_kind)),
              std::string(BoundKindName(curve.bound_kind)), value);
        }
      }
      const BatchRates rates =
          Unwrap(LowerBoundRates(args->horizon, args->batches));
      add("rate_excess", nullptr, nullptr, rates.excess);
      add("rate_competitive_ratio", nullptr, nullptr, rates.competitive_ratio);
      add("rate_maximum", nullptr, nullptr, rates.maximum);
      Deliver(Render(records, flags_.format,
                     {"quantity", "grid_kind", "bound_kind", "T", "M",
                      "value"}));
      return kExitOk;
    };
  });
}

void Cli::AddVerify(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "verify", "Monte Carlo checks of the concentration bounds");
  sub->fallthrough();
  struct Args {
    std::string check = "all";
    double delta = 0.05;
    int64_t tau = 2048;
    std::optional<int64_t> reps;
    int64_t horizon = 10000;
    double gap = 0.5;
    std::optional<int64_t> t;
    double sigmas = 3.0;
  };
  auto args = std::make_shared<Args>();
  sub->add_option("--check", args->check, "Which check to run")
      ->check(CLI::IsMember({"test_error", "go_for_broke", "maximal", "all"}))
      ->capture_default_str();
  sub->add_option("--delta", args->delta, "Confidence level (maximal)")
      ->capture_default_str();
  sub->add_option("--tau", args->tau, "Rounds (maximal)")
      ->capture_default_str();
  sub->add_option("--reps", args->reps,
                  "Replications (default 10000; 100000 for go_for_broke)");
  sub->add_option("--T", args->horizon, "Horizon (test_error)")
      ->capture_default_str();
  sub->add_option("--gap", args->gap, "Gap (test_error, go_for_broke)")
      ->capture_default_str();
  sub->add_option("--t", args->t,
                  "Total balanced pulls (default 4096 for test_error, 512 "
                  "for go_for_broke)");
  sub->add_option("--sigmas", args->sigmas,
                  "Monte Carlo sigmas allowed above the bound")
      ->capture_default_str();
  sub->callback([this, args] {
    action_ = [this, args] {
      const bool all = args->check == "all";
      Json records = Json::array();
      bool passed = true;
      const auto add = [&](const char* name, const MonteCarloCheck& check) {
        const bool ok = check.Passes(args->sigmas);
        passed = passed && ok;
        Json r;
        r["check"] = name;
        r["frequency"] = check.frequency;
        r["bound"] = check.bound;
        r["sigma"] = check.sigma;
        r["hits"] = check.hits;
        r["trials"] = check.trials;
        r["pass"] = ok;
        records.push_back(std::move(r));
      };
      if (all || args->check == "test_error") {
        add("test_error",
            Unwrap(TestErrorRate(args->t.value_or(4096), args->horizon,
                                 args->gap, args->reps.value_or(10000),
                                 flags_.seed, flags_.threads)));
      }
      if (all || args->check == "go_for_broke") {
        add("go_for_broke",
            Unwrap(GoForBrokeErrorRate(args->t.value_or(512), args->gap,
                                       args->reps.value_or(100000),
                                       flags_.seed, flags_.threads)));
      }
      if (all || args->check == "maximal") {
        add("maximal",
            Unwrap(VerifyMaximalInequality(args->delta, args->tau,
                                           args->reps.value_or(10000),
                                           flags_.seed, flags_.threads)));
      }
      Deliver(Render(records, flags_.format,
                     {"check", "frequency", "bound", "sigma", "hits",
                      "trials", "pass"}));
      return passed ? kExitOk : kExitVerifyFailed;
    };
  });
}

void Cli::AddSweep(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "sweep", "Regret versus T for all grids and UCB2 (M = 5, gap 0.1)");
  sub->fallthrough();
  struct Args {
    std::optional<int64_t> replications;
    std::vector<int64_t> horizons;
    bool realized = false;
  };
  auto args = std::make_shared<Args>();
  sub->add_option("--reps", args->replications, "Replications (default 100)");
  sub->add_option("--T", args->horizons, "Override the horizons");
  sub->add_flag("--realized", args->realized,
                "Add the mean realized regret column");
  sub->callback([this, args] {
    action_ = [this, args] {
      SimConfig config = SweepPreset();
      if (args->replications) config.replications = *args->replications;
      if (!args->horizons.empty()) config.horizons = args->horizons;
      Simulated(std::move(config), args->realized);
      return kExitOk;
    };
  });
}

int Cli::Run(int argc, const char* const* argv) {
  CLI::App app{"Batched two-armed bandit simulator", "batchbandit"};
  app.require_subcommand(1);
  auto* seed = app.add_option("--seed", flags_.seed, "Master seed");
  app.add_option("--out", flags_.out_path, "Output file (default stdout)");
  app.add_option("--format", flags_.format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", flags_.threads,
                 "Worker threads (0: BATCHBANDIT_THREADS or all cores)");
  AddGrid(app);
  AddSimulate(app);
  AddBounds(app);
  AddVerify(app);
  AddSweep(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfigError;
  }
  flags_.seed_set = seed->count() > 0;
  flags_.format = *ParseFormat(flags_.format_name);

  try {
    return action_();
  } catch (const ConfigError& e) {
    err_ << "error: " << e.status.message() << "\n";
    return kExitConfigError;
  }
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  return Cli(out, err).Run(argc, argv);
}

}  // namespace batchbandit
