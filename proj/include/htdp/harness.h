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


// Repeated-trial experiment runner for the private optimizers.

#ifndef HTDP_HARNESS_H_
#define HTDP_HARNESS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "htdp/datagen.h"
#include "htdp/dataset.h"
#include "htdp/losses.h"
#include "htdp/privacy_budget.h"

namespace htdp {

enum class Algorithm {
  kFrankWolfe,    // robust-gradient Frank-Wolfe over the unit l1 ball
  kLasso,         // truncated full-data Frank-Wolfe over the unit l1 ball
  kSparseLinear,  // truncated IHT for sparse linear regression
  kSparseOpt,     // robust-gradient IHT for sparsity-constrained losses
};

const char* AlgorithmName(Algorithm algorithm);
absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name);

// delta as a function of n: n^-p ("n^-1.1") or a constant ("fixed:1e-5").
struct DeltaRule {
  bool fixed = false;
  double value = 1.1;

  double Delta(int64_t n) const;
  std::string ToString() const;
  static absl::StatusOr<DeltaRule> Parse(const std::string& text);
};

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kFrankWolfe;
  LossModel loss = LossModel::Squared();

  // Synthetic data. Ignored when `data_path` is set.
  FeatureDistribution features = FeatureDistribution::Gaussian(1.0);
  NoiseDistribution noise = NoiseDistribution::None();

  // Real data: rows are read from this CSV. Grid values of n cap the number
  // of leading rows used (0 = all rows); d comes from the file.
  std::string data_path;
  int64_t target_column = 0;
  bool standardize = false;

  std::vector<int64_t> n_grid;
  std::vector<int64_t> d_grid;
  std::vector<double> eps_grid;
  // Sparse algorithms only; polytope algorithms record s* = 0.
  std::vector<int64_t> s_star_grid = {1};

  // s = s_mult * s* for the sparse linear learner.
  int64_t s_mult = 2;
  // k = c2 n eps for the sparse general learner.
  double c2 = 1.0;

  int64_t trials = 20;
  uint64_t seed = 1;
  DeltaRule delta_rule;

  // Iterations of the non-private reference solver on real data.
  int64_t baseline_iterations = 2000;
  // Record the excess risk after every iteration.
  bool track_series = true;

  absl::Status Validate() const;
};

struct TrialRecord {
  Algorithm algorithm = Algorithm::kFrankWolfe;
  int64_t n = 0;
  int64_t d = 0;
  double epsilon = 0;
  int64_t s_star = 0;
  int64_t trial = 0;

  double excess_risk = 0;
  // Excess risk after each of the T iterations.
  std::vector<double> series;
  double wall_ms = 0;
  int64_t iterations = 0;

  bool failed = false;
  std::string error;

  // Declared budget and what the run's accountant recorded.
  double declared_epsilon = 0;
  double declared_delta = 0;
  double spent_epsilon = 0;
  double spent_delta = 0;
  // Per-step budget of full-data runs (advanced composition), else 0.
  double step_epsilon = 0;
};

struct GridPointSummary {
  Algorithm algorithm = Algorithm::kFrankWolfe;
  int64_t n = 0;
  int64_t d = 0;
  double epsilon = 0;
  int64_t s_star = 0;
  double mean_excess_risk = 0;
  double mean_wall_ms = 0;
  int64_t completed = 0;
  int64_t failed = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::vector<GridPointSummary> summaries;
};

// Mean over the rows of loss(w) - loss(w_ref), accumulated row by row so that
// large losses do not swamp a small difference. May be negative.
absl::StatusOr<double> ComputeExcessRisk(const LossModel& model,
                                         const Dataset& data, const Vector& w,
                                         const Vector& w_ref);

// Reference solution on real data: non-private Frank-Wolfe over the unit l1
// ball for the polytope algorithms, full-gradient hard thresholding at
// sparsity `s` (projected onto the unit l2 ball for the linear learner) for
// the sparse ones.
absl::StatusOr<Vector> ReferenceSolution(Algorithm algorithm,
                                         const LossModel& model,
                                         const Dataset& data, int64_t s,
                                         int64_t iterations);

// Runs every grid point `trials` times. Trial failures are recorded, not
// returned; only configuration and data-loading problems abort the run.
absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& cfg);

// Means over completed trials, one entry per grid point in record order.
std::vector<GridPointSummary> Summarize(const std::vector<TrialRecord>& records);

// Header algorithm,n,d,epsilon,s_star,trial,excess_risk,wall_ms,failed; one
// row per trial followed by one AGG row per grid point (trial column "AGG",
// failed column = number of failed trials). Floats at 10 significant digits.
// With `wall_time` false the wall_ms column is left empty so that reruns are
// byte-identical.
absl::Status WriteResultsCsv(const ExperimentResult& result,
                             const std::string& path, bool wall_time = true);

// Mean excess risk as two-column blocks, one block per combination of the
// grid values that are not on the x axis. The x axis is the first of n, eps,
// s* whose grid has more than one value (n if none does).
absl::Status EmitPlotSeries(const ExperimentResult& result,
                            const std::string& path);

}  // namespace htdp

#endif  // HTDP_HARNESS_H_
