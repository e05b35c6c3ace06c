// Copyright 2026 The htdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: runs the private optimizers over parameter grids,
// generates synthetic data and computes reference solutions.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "htdp/csv.h"
#include "htdp/datagen.h"
#include "htdp/harness.h"
#include "htdp/losses.h"
#include "htdp/random_stream.h"
#include "htdp/status_macros.h"

namespace {

using htdp::Algorithm;

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitBudget = 4;

int ExitCode(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return 0;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kUnavailable:
      return kExitData;
    case absl::StatusCode::kResourceExhausted:
      return kExitBudget;
    default:
      return kExitConfig;
  }
}

int Fail(const absl::Status& status) {
  std::fprintf(stderr, "htdp: %s\n", std::string(status.message()).c_str());
  return ExitCode(status);
}

template <typename T>
absl::StatusOr<std::vector<T>> ParseList(const std::string& flag,
                                         const std::string& text) {
  std::vector<T> out;
  for (absl::string_view piece : absl::StrSplit(text, ',', absl::SkipEmpty())) {
    T value;
    bool ok;
    if constexpr (std::is_same_v<T, double>) {
      ok = absl::SimpleAtod(piece, &value);
    } else {
      double as_double;
      // Accept 1e4-style integers as well as plain digits.
      ok = absl::SimpleAtoi(piece, &value) ||
           (absl::SimpleAtod(piece, &as_double) &&
            as_double == static_cast<double>(static_cast<T>(as_double)) &&
            (value = static_cast<T>(as_double), true));
    }
    if (!ok) {
      return absl::InvalidArgumentError(
          absl::StrFormat("--%s: cannot parse '%s'", flag, piece));
    }
    out.push_back(value);
  }
  if (out.empty()) {
    return absl::InvalidArgumentError(absl::StrFormat("--%s is empty", flag));
  }
  return out;
}

struct CommonFlags {
  std::string n = "10000";
  std::string d = "100";
  std::string eps = "1";
  std::string delta_rule = "n^-1.1";
  std::string s_star = "10";
  int64_t s_mult = 2;
  double c2 = 1.0;
  std::string dist = "lognormal:0,0.6";
  std::string noise = "gaussian:0.1";
  std::string loss = "squared";
  double reg_lambda = 0.01;
  double biweight_c = 1.0;
  std::string gaussian_param = "variance";
  int64_t trials = 20;
  uint64_t seed = 1;
  std::string csv;
  std::string plot;
  std::string data;
  int64_t target_col = 0;
  bool standardize = false;
  bool no_wall_time = false;
  int64_t baseline_iterations = 2000;
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--n", f.n, "sample sizes, comma-separated")
      ->capture_default_str();
  cmd->add_option("--d", f.d, "dimensions, comma-separated")
      ->capture_default_str();
  cmd->add_option("--eps", f.eps, "epsilons, comma-separated")
      ->capture_default_str();
  cmd->add_option("--delta-rule", f.delta_rule, "n^-<p> or fixed:<v>")
      ->capture_default_str();
  cmd->add_option("--sstar", f.s_star, "true sparsities, comma-separated")
      ->capture_default_str();
  cmd->add_option("--smult", f.s_mult, "s = smult * s* (sparse linear)")
      ->capture_default_str();
  cmd->add_option("--c2", f.c2, "k = c2 n eps (sparse opt)")
      ->capture_default_str();
  cmd->add_option("--dist", f.dist,
                  "lognormal:mu,sigma | student_t:nu | gaussian:p | laplace:p")
      ->capture_default_str();
  cmd->add_option("--noise", f.noise,
                  "none | gaussian:p | lognormal:mu,sigma | loglogistic:c | "
                  "loggamma:c | logistic:u,s")
      ->capture_default_str();
  cmd->add_option("--loss", f.loss, "squared | logistic_l2 | biweight | mean")
      ->capture_default_str();
  cmd->add_option("--reg-lambda", f.reg_lambda, "l2 penalty of logistic_l2")
      ->capture_default_str();
  cmd->add_option("--biweight-c", f.biweight_c, "biweight cutoff")
      ->capture_default_str();
  cmd->add_option("--gaussian-param", f.gaussian_param,
                  "gaussian:p / laplace:p give the variance (p = var, "
                  "laplace scale) or the standard deviation (stddev)")
      ->check(CLI::IsMember({"variance", "stddev"}))
      ->capture_default_str();
  cmd->add_option("--trials", f.trials, "repetitions per grid point")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "master seed")->capture_default_str();
  cmd->add_option("--csv", f.csv, "per-trial results CSV");
  cmd->add_option("--plot", f.plot, "plot series file");
  cmd->add_option("--data", f.data, "real-data CSV instead of synthetic data");
  cmd->add_option("--target-col", f.target_col, "response column of --data")
      ->capture_default_str();
  cmd->add_flag("--standardize", f.standardize,
                "scale --data feature columns to zero mean, unit variance");
  cmd->add_flag("--no-wall-time", f.no_wall_time,
                "leave wall_ms empty so reruns give identical files");
  cmd->add_option("--baseline-iters", f.baseline_iterations,
                  "reference solver iterations on real data")
      ->capture_default_str();
}

htdp::SpreadParam Spread(const CommonFlags& f) {
  return f.gaussian_param == "stddev" ? htdp::SpreadParam::kStdDev
                                      : htdp::SpreadParam::kVariance;
}

absl::StatusOr<htdp::LossModel> BuildLoss(const CommonFlags& f) {
  ASSIGN_OR_RETURN(const htdp::LossKind kind, htdp::ParseLossKind(f.loss));
  htdp::LossModel model;
  model.kind = kind;
  model.reg_lambda = kind == htdp::LossKind::kLogisticL2 ? f.reg_lambda : 0.0;
  model.biweight_c = f.biweight_c;
  RETURN_IF_ERROR(model.Validate());
  return model;
}

absl::StatusOr<htdp::ExperimentConfig> BuildConfig(Algorithm algorithm,
                                                   const CommonFlags& f) {
  htdp::ExperimentConfig cfg;
  cfg.algorithm = algorithm;
  ASSIGN_OR_RETURN(cfg.loss, BuildLoss(f));
  ASSIGN_OR_RETURN(cfg.features,
                   htdp::ParseFeatureDistribution(f.dist, Spread(f)));
  ASSIGN_OR_RETURN(cfg.noise, htdp::ParseNoiseDistribution(f.noise, Spread(f)));
  ASSIGN_OR_RETURN(cfg.n_grid, ParseList<int64_t>("n", f.n));
  ASSIGN_OR_RETURN(cfg.d_grid, ParseList<int64_t>("d", f.d));
  ASSIGN_OR_RETURN(cfg.eps_grid, ParseList<double>("eps", f.eps));
  ASSIGN_OR_RETURN(cfg.s_star_grid, ParseList<int64_t>("sstar", f.s_star));
  ASSIGN_OR_RETURN(cfg.delta_rule, htdp::DeltaRule::Parse(f.delta_rule));
  cfg.s_mult = f.s_mult;
  cfg.c2 = f.c2;
  cfg.trials = f.trials;
  cfg.seed = f.seed;
  cfg.data_path = f.data;
  cfg.target_column = f.target_col;
  cfg.standardize = f.standardize;
  cfg.baseline_iterations = f.baseline_iterations;
  RETURN_IF_ERROR(cfg.Validate());
  return cfg;
}

absl::Status RunGrid(Algorithm algorithm, const CommonFlags& f) {
  ASSIGN_OR_RETURN(const htdp::ExperimentConfig cfg, BuildConfig(algorithm, f));
  ASSIGN_OR_RETURN(const htdp::ExperimentResult result, htdp::RunExperiment(cfg));
  std::printf("%-14s %8s %6s %8s %6s %16s %6s %6s\n", "algorithm", "n", "d",
              "epsilon", "s*", "mean_excess", "ok", "failed");
  for (const htdp::GridPointSummary& s : result.summaries) {
    std::printf("%-14s %8lld %6lld %8.4g %6lld %16.6g %6lld %6lld\n",
                htdp::AlgorithmName(s.algorithm), static_cast<long long>(s.n),
                static_cast<long long>(s.d), s.epsilon,
                static_cast<long long>(s.s_star), s.mean_excess_risk,
                static_cast<long long>(s.completed),
                static_cast<long long>(s.failed));
  }
  if (!f.csv.empty()) {
    RETURN_IF_ERROR(htdp::WriteResultsCsv(result, f.csv, !f.no_wall_time));
  }
  if (!f.plot.empty()) RETURN_IF_ERROR(htdp::EmitPlotSeries(result, f.plot));

  // Report failed trials; a budget failure anywhere is fatal for the exit code.
  bool budget_failure = false;
  for (const htdp::TrialRecord& r : result.records) {
    if (!r.failed) continue;
    std::fprintf(stderr, "trial n=%lld d=%lld eps=%g s*=%lld #%lld failed: %s\n",
                 static_cast<long long>(r.n), static_cast<long long>(r.d),
                 r.epsilon, static_cast<long long>(r.s_star),
                 static_cast<long long>(r.trial), r.error.c_str());
    if (r.error.find("exceed budget") != std::string::npos ||
        r.error.find("overspent") != std::string::npos) {
      budget_failure = true;
    }
  }
  if (budget_failure) {
    return absl::ResourceExhaustedError("privacy budget check failed");
  }
  return absl::OkStatus();
}

struct GenFlags {
  int64_t n = 1000;
  int64_t d = 10;
  int64_t s_star = 0;
  std::string dist = "gaussian:1";
  std::string noise = "none";
  std::string loss = "squared";
  std::string gaussian_param = "variance";
  uint64_t seed = 1;
  std::string out;
};

absl::Status GenerateData(const GenFlags& f) {
  const htdp::SpreadParam spread = f.gaussian_param == "stddev"
                                       ? htdp::SpreadParam::kStdDev
                                       : htdp::SpreadParam::kVariance;
  ASSIGN_OR_RETURN(const auto feat, htdp::ParseFeatureDistribution(f.dist, spread));
  ASSIGN_OR_RETURN(const auto noise, htdp::ParseNoiseDistribution(f.noise, spread));
  ASSIGN_OR_RETURN(const htdp::LossKind kind, htdp::ParseLossKind(f.loss));
  if (f.n < 1 || f.d < 1 || f.s_star < 0 || f.s_star > f.d) {
    return absl::InvalidArgumentError("need n, d >= 1 and 0 <= s* <= d");
  }
  htdp::RandomStream rng(f.seed, 0);
  htdp::RandomStream truth_rng = rng.Derive(1);
  htdp::RandomStream row_rng = rng.Derive(2);
  const htdp::Vector w_star =
      f.s_star > 0 ? htdp::GenWStarSparse(f.d, f.s_star, truth_rng)
                   : htdp::GenWStarL1(f.d, truth_rng);
  absl::StatusOr<htdp::Dataset> data =
      kind == htdp::LossKind::kLogisticL2
          ? htdp::GenLogistic(f.n, f.d, w_star, feat, noise, row_rng)
          : htdp::GenLinear(f.n, f.d, w_star, feat, noise, row_rng);
  RETURN_IF_ERROR(data.status());
  RETURN_IF_ERROR(htdp::WriteDatasetCsv(*data, f.out));
  std::printf("wrote %lld x %lld to %s\nw*:", static_cast<long long>(f.n),
              static_cast<long long>(f.d), f.out.c_str());
  for (int64_t j = 0; j < f.d; ++j) std::printf(" %.10g", w_star[j]);
  std::printf("\n");
  return absl::OkStatus();
}

struct BaselineFlags {
  std::string data;
  int64_t target_col = 0;
  std::string algorithm = "fw";
  std::string loss = "squared";
  double reg_lambda = 0.01;
  int64_t sparsity = 10;
  int64_t iterations = 2000;
  int64_t max_rows = 0;
  bool standardize = false;
};

absl::Status Baseline(const BaselineFlags& f) {
  ASSIGN_OR_RETURN(const Algorithm algorithm, htdp::ParseAlgorithm(f.algorithm));
  ASSIGN_OR_RETURN(const htdp::LossKind kind, htdp::ParseLossKind(f.loss));
  htdp::LossModel model;
  model.kind = kind;
  model.reg_lambda = kind == htdp::LossKind::kLogisticL2 ? f.reg_lambda : 0.0;
  RETURN_IF_ERROR(model.Validate());
  ASSIGN_OR_RETURN(htdp::Dataset data,
                   htdp::LoadCsv(f.data, f.target_col, f.max_rows));
  if (f.standardize) data = htdp::StandardizeFeatures(data);
  ASSIGN_OR_RETURN(const htdp::Vector w,
                   htdp::ReferenceSolution(algorithm, model, data, f.sparsity,
                                           f.iterations));
  ASSIGN_OR_RETURN(const double risk, htdp::EmpiricalRisk(model, w, data));
  std::printf("rows %lld dim %lld empirical_risk %.10g\nw:",
              static_cast<long long>(data.num_rows()),
              static_cast<long long>(data.dim()), risk);
  for (int64_t j = 0; j < w.size(); ++j) std::printf(" %.10g", w[j]);
  std::printf("\n");
  return absl::OkStatus();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private optimization for heavy-tailed data"};
  app.require_subcommand(1);

  struct Runner {
    const char* name;
    const char* help;
    Algorithm algorithm;
    CommonFlags flags;
    CLI::App* cmd = nullptr;
  };
  std::vector<Runner> runners = {
      {"run-fw", "robust-gradient private Frank-Wolfe", Algorithm::kFrankWolfe, {}},
      {"run-lasso", "truncated private Frank-Wolfe (LASSO)", Algorithm::kLasso, {}},
      {"run-sparse-linear", "truncated private IHT for sparse linear regression",
       Algorithm::kSparseLinear, {}},
      {"run-sparse-opt", "robust-gradient private IHT", Algorithm::kSparseOpt, {}},
  };
  runners[2].flags.dist = "gaussian:5";
  runners[2].flags.noise = "lognormal:0,0.5";
  runners[3].flags.dist = "gaussian:5";
  runners[3].flags.noise = "logistic:0,0.5";
  runners[3].flags.loss = "logistic_l2";
  for (Runner& r : runners) {
    r.cmd = app.add_subcommand(r.name, r.help);
    AddCommonFlags(r.cmd, r.flags);
  }

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen-data", "write a synthetic dataset");
  gen_cmd->add_option("--n", gen.n, "rows")->capture_default_str();
  gen_cmd->add_option("--d", gen.d, "features")->capture_default_str();
  gen_cmd->add_option("--sstar", gen.s_star,
                      "sparse w* with s* nonzeros (0: dense, ||w*||_1 = 1)")
      ->capture_default_str();
  gen_cmd->add_option("--dist", gen.dist, "feature distribution")
      ->capture_default_str();
  gen_cmd->add_option("--noise", gen.noise, "noise distribution")
      ->capture_default_str();
  gen_cmd->add_option("--loss", gen.loss,
                      "logistic_l2 produces +-1 labels, anything else a "
                      "linear response")
      ->capture_default_str();
  gen_cmd->add_option("--gaussian-param", gen.gaussian_param,
                      "variance or stddev")
      ->check(CLI::IsMember({"variance", "stddev"}))
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "output CSV")->required();

  BaselineFlags base;
  CLI::App* base_cmd =
      app.add_subcommand("baseline", "non-private reference solution for a CSV");
  base_cmd->add_option("--data", base.data, "input CSV")->required();
  base_cmd->add_option("--target-col", base.target_col, "response column")
      ->capture_default_str();
  base_cmd->add_option("--algorithm", base.algorithm,
                       "fw | lasso (l1 ball) or sparse_linear | sparse_opt")
      ->capture_default_str();
  base_cmd->add_option("--loss", base.loss, "loss")->capture_default_str();
  base_cmd->add_option("--reg-lambda", base.reg_lambda, "logistic l2 penalty")
      ->capture_default_str();
  base_cmd->add_option("--sparsity", base.sparsity, "sparse algorithms only")
      ->capture_default_str();
  base_cmd->add_option("--iterations", base.iterations, "solver iterations")
      ->capture_default_str();
  base_cmd->add_option("--max-rows", base.max_rows, "0 reads every row")
      ->capture_default_str();
  base_cmd->add_flag("--standardize", base.standardize, "standardize features");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  absl::Status status;
  for (const Runner& r : runners) {
    if (r.cmd->parsed()) status = RunGrid(r.algorithm, r.flags);
  }
  if (gen_cmd->parsed()) status = GenerateData(gen);
  if (base_cmd->parsed()) status = Baseline(base);
  if (!status.ok()) return Fail(status);
  return 0;
}
