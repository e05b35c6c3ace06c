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


// Frank-Wolfe over polytopes with private vertex selection.
//
// HtDpFrankWolfe splits the data into T blocks and spends block t on
// iteration t: the gradient is the coordinate-wise robust mean of the block's
// per-sample gradients, and the vertex is drawn by the exponential mechanism
// with scores -<v, g>. TruncatedDpFrankWolfeLasso instead shrinks every entry
// to [-K, K] and reuses the whole dataset at every step, so its per-step budget
// comes from advanced composition.

#ifndef HTDP_FRANK_WOLFE_H_
#define HTDP_FRANK_WOLFE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "htdp/dataset.h"
#include "htdp/domain.h"
#include "htdp/losses.h"
#include "htdp/privacy_budget.h"
#include "htdp/random_stream.h"
#include "htdp/robust_mean.h"

namespace htdp {

enum class StepSchedule {
  // eta_{t-1} = 2 / (t + 2) at iteration t = 1..T.
  kHarmonic,
  // eta fixed at FWConfig::constant_step.
  kConstant,
};

enum class VertexSelection {
  kExponentialMechanism,
  // Exact argmax of the scores. No privacy; the accountant is marked
  // non-private instead of charged.
  kExactArgMax,
};

struct FWConfig {
  int64_t iterations = 1;
  CatoniParams catoni;
  double truncation_k = 0.0;
  StepSchedule step_schedule = StepSchedule::kHarmonic;
  double constant_step = 0.0;
  // Moment bound on the gradient coordinates. Only used by the schedules.
  double tau = 1.0;
  VertexSelection selection = VertexSelection::kExponentialMechanism;
  // Store every iterate in OptimizationResult::iterates.
  bool keep_iterates = false;
  // Evaluate the empirical risk on the full data after every iteration.
  bool track_risk = false;

  // Step size used at iteration t (1-based).
  double StepSize(int64_t t) const;
  absl::Status Validate() const;
};

struct OptimizationResult {
  Vector w;
  // w^1..w^T when requested (w0 excluded).
  std::vector<Vector> iterates;
  // Empirical risk of w^1..w^T when requested.
  std::vector<double> risk;
  // Storage offset of the block read at each iteration, for methods that
  // split the data.
  std::vector<int64_t> block_offsets;
  int64_t block_rows = 0;
};

// Heavy-tailed private Frank-Wolfe. epsilon-DP with the accountant charged
// (epsilon, 0) once for the T disjoint blocks. The budget's delta is unused.
absl::StatusOr<OptimizationResult> HtDpFrankWolfe(
    const Dataset& data, const LossModel& model, const PolytopeDomain& domain,
    BudgetAccountant& accountant, const FWConfig& cfg, const Vector& w0,
    RandomStream& rng);

// Full-data private Frank-Wolfe for the squared loss without any shrinking.
// `cfg.truncation_k` must bound every |entry| of `data` for the calibration
// 8 ||W||_1 K^2 / n to be a valid sensitivity; the caller is responsible.
absl::StatusOr<OptimizationResult> DpFrankWolfeSquaredLoss(
    const Dataset& data, const PolytopeDomain& domain,
    BudgetAccountant& accountant, const FWConfig& cfg, const Vector& w0,
    RandomStream& rng);

// Shrinks `data` at cfg.truncation_k, then runs DpFrankWolfeSquaredLoss.
// (epsilon, delta)-DP; requires 0 < delta < 1.
absl::StatusOr<OptimizationResult> TruncatedDpFrankWolfeLasso(
    const Dataset& data, const PolytopeDomain& domain,
    BudgetAccountant& accountant, const FWConfig& cfg, const Vector& w0,
    RandomStream& rng);

// Classical Frank-Wolfe with the exact gradient and the exact minimizing
// vertex, harmonic steps.
absl::StatusOr<OptimizationResult> NonPrivateFrankWolfe(
    const Dataset& data, const LossModel& model, const PolytopeDomain& domain,
    int64_t iterations, const Vector& w0, bool track_risk = false);

// Per-step epsilon of the truncated LASSO: epsilon / (2 sqrt(2 T ln(1/delta))).
double LassoStepEpsilon(double epsilon, double delta, int64_t steps);

// floor(x^(p/q)) computed without floating-point drift at perfect powers,
// clamped below at 1. Requires x >= 0.
int64_t FloorRationalPower(double x, int p, int q);

// T = floor((n eps)^(1/3)) (>= 1), scale = floor(n eps), beta = 1, harmonic.
absl::StatusOr<FWConfig> DefaultScheduleAlg1(int64_t n, double epsilon);

// T = floor((n eps)^(2/5)) (>= 1), K = (n eps)^(1/4) / T^(1/8), harmonic.
absl::StatusOr<FWConfig> DefaultScheduleAlg2(int64_t n, double epsilon);

// Rate-optimal schedules with every hidden constant set to 1. `num_vertices`
// is |V|, `zeta` the failure probability, `alpha` the smoothness constant.
absl::StatusOr<FWConfig> ConvexScheduleAlg1(int64_t n, double epsilon,
                                            int64_t dim, int64_t num_vertices,
                                            double tau, double alpha,
                                            double zeta);
// Robust regression (biweight) variant: constant steps 1 / sqrt(T).
absl::StatusOr<FWConfig> RobustRegressionScheduleAlg1(int64_t n, double epsilon,
                                                      int64_t dim, double zeta);
// T solved by fixed-point iteration since it appears inside its own log term.
absl::StatusOr<FWConfig> RateScheduleAlg2(int64_t n, double epsilon,
                                          double delta, int64_t dim,
                                          double lambda_max, double zeta);

}  // namespace htdp

#endif  // HTDP_FRANK_WOLFE_H_
