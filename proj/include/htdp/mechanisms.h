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

#ifndef HTDP_MECHANISMS_H_
#define HTDP_MECHANISMS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "htdp/dataset.h"
#include "htdp/privacy_budget.h"
#include "htdp/random_stream.h"

namespace htdp {

// Candidate scores u(D, r) together with their sensitivity Delta.
struct ScoredCandidates {
  std::vector<double> scores;
  double sensitivity = 1.0;
};

// Draw from Laplace(0, scale), density exp(-|x| / scale) / (2 scale).
// scale = 0 returns exactly 0 without consuming randomness.
absl::StatusOr<double> LaplaceSample(double scale, RandomStream& rng);

// Selection probabilities of the exponential mechanism,
// p_i proportional to exp(epsilon u_i / (2 Delta)), computed in log space.
absl::StatusOr<std::vector<double>> ExponentialMechanismProbabilities(
    std::span<const double> scores, double sensitivity, double epsilon);

// Samples an index with the probabilities above by inverse CDF.
absl::StatusOr<int64_t> ExponentialSelect(std::span<const double> scores,
                                          double sensitivity, double epsilon,
                                          RandomStream& rng);
absl::StatusOr<int64_t> ExponentialSelect(const ScoredCandidates& candidates,
                                          double epsilon, RandomStream& rng);

// Index of the largest score, lowest index on ties. Requires non-empty input.
int64_t ArgMax(std::span<const double> scores);

// Per-mechanism budget for T-fold advanced composition targeting
// (epsilon, T delta' + delta): epsilon' = epsilon / (2 sqrt(2 T ln(2/delta))),
// delta' = delta / T. Requires 0 < epsilon < 1, 0 < delta < 1, T >= 1.
absl::StatusOr<StepBudget> AdvancedCompositionStepBudget(double epsilon,
                                                         double delta,
                                                         int64_t steps);

// Laplace scale used by every round of Peeling:
// 2 lambda sqrt(3 s ln(1/delta)) / epsilon.
double PeelingNoiseScale(int64_t s, double epsilon, double delta,
                         double lambda);

// Private top-s selection of `v` by magnitude (report-noisy-max, s rounds).
//
// `lambda` bounds the l-infinity sensitivity of v. Each round draws a fresh
// d-vector of Laplace noise and picks the unselected index maximizing
// |v_j| + noise_j (lowest index on ties). The result is v restricted to the
// selected set plus one more fresh Laplace vector on that set; every other
// coordinate is exactly 0. lambda = 0 gives exact top-s with no noise.
absl::StatusOr<Vector> Peeling(const Vector& v, int64_t s, double epsilon,
                               double delta, double lambda, RandomStream& rng);

}  // namespace htdp

#endif  // HTDP_MECHANISMS_H_
