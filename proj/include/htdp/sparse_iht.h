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


// Private iterative hard thresholding for sparse models.
//
// Both learners split the data into T blocks, take one gradient step per
// block and keep s coordinates with Peeling. HtSparseLinear shrinks the data
// first and projects onto the unit l2 ball; HtSparseOpt uses the robust
// gradient estimator and does not project.

#ifndef HTDP_SPARSE_IHT_H_
#define HTDP_SPARSE_IHT_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "htdp/dataset.h"
#include "htdp/frank_wolfe.h"
#include "htdp/losses.h"
#include "htdp/privacy_budget.h"
#include "htdp/random_stream.h"
#include "htdp/robust_mean.h"

namespace htdp {

struct IHTConfig {
  int64_t iterations = 1;
  int64_t working_sparsity = 1;
  // eta_0 for the linear learner, eta for the general one.
  double step = 0.5;
  double truncation_k = 0.0;
  CatoniParams catoni;
  // Peeling runs with lambda = 0 (exact top-s). The run is not private and
  // the accountant is marked accordingly.
  bool noiseless = false;
  // HtSparseOpt only: use the block's mean gradient instead of the robust
  // estimate. Not private unless combined with a valid calibration; intended
  // for debugging alongside `noiseless`.
  bool exact_gradients = false;
  bool keep_iterates = false;
  // Risk on the full (unshrunk) data after every iteration.
  bool track_risk = false;

  absl::Status Validate(int64_t dim) const;
};

// Sparse linear regression, squared loss. `w1` must be s-sparse with
// ||w1||_2 <= 1. Charges (epsilon, delta) once for the T disjoint blocks.
absl::StatusOr<OptimizationResult> HtSparseLinear(const Dataset& data,
                                                  BudgetAccountant& accountant,
                                                  const IHTConfig& cfg,
                                                  const Vector& w1,
                                                  RandomStream& rng);

// Sparsity-constrained minimization of `model`. `w1` must be s-sparse.
// Charges (epsilon, delta) once for the T disjoint blocks.
absl::StatusOr<OptimizationResult> HtSparseOpt(const Dataset& data,
                                               const LossModel& model,
                                               BudgetAccountant& accountant,
                                               const IHTConfig& cfg,
                                               const Vector& w1,
                                               RandomStream& rng);

// Peeling calibration of the linear learner: 2 K^2 eta_0 (sqrt(s) + 1) / m.
double SparseLinearLambda(double k, double step, int64_t s, int64_t m);

// Peeling calibration of the general learner: 4 sqrt(2) k eta / m.
double SparseOptLambda(double k, double step, int64_t m);

// s = c s*, T = floor(ln n) (>= 1), K = (n eps / (s T))^(1/4), eta_0 = 0.5.
absl::StatusOr<IHTConfig> DefaultScheduleAlg3(int64_t n, double epsilon,
                                              int64_t s_star, int64_t c_mult);

// s = 2 s*, T = floor(ln n) (>= 1), k = c2 n eps, eta = 0.5, beta = 1.
absl::StatusOr<IHTConfig> DefaultScheduleAlg5(int64_t n, double epsilon,
                                              int64_t s_star, double c2);

// Rate schedules with hidden constants set to 1, for user-supplied
// gamma = lambda_max(E x x^T) and mu = lambda_min(E x x^T):
//   T = floor((gamma / mu) ln n), s = ceil(72 (gamma / mu)^2 s*),
//   K = (n eps / (s T))^(1/4), eta_0 = 2 / (3 gamma).
absl::StatusOr<IHTConfig> RateScheduleAlg3(int64_t n, double epsilon,
                                           int64_t s_star, double gamma,
                                           double mu);
// Restricted smoothness gamma and strong convexity mu of the risk:
//   T = floor((gamma / mu) ln n), s = ceil((gamma / mu)^2 s*), beta = 1,
//   eta = 2 / (3 gamma), k = sqrt(n eps tau).
absl::StatusOr<IHTConfig> RateScheduleAlg5(int64_t n, double epsilon,
                                           int64_t s_star, double gamma,
                                           double mu, double tau);

}  // namespace htdp

#endif  // HTDP_SPARSE_IHT_H_
