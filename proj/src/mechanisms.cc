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


#include "htdp/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

absl::Status CheckSelectionInputs(std::span<const double> scores,
                                  double sensitivity, double epsilon) {
  if (scores.empty()) {
    return absl::InvalidArgumentError("no candidates to select from");
  }
  if (!(sensitivity > 0) || !std::isfinite(sensitivity)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "sensitivity must be positive and finite, got %g", sensitivity));
  }
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive and finite, got %g", epsilon));
  }
  for (double u : scores) {
    if (!std::isfinite(u)) {
      return absl::InvalidArgumentError("candidate scores must be finite");
    }
  }
  return absl::OkStatus();
}

// Unnormalized weights exp(epsilon (u_i - max u) / (2 Delta)); the largest is
// exactly 1, so the sum lies in [1, n].
std::vector<double> ShiftedWeights(std::span<const double> scores,
                                   double sensitivity, double epsilon) {
  const double top = *std::max_element(scores.begin(), scores.end());
  const double factor = epsilon / (2.0 * sensitivity);
  std::vector<double> weights(scores.size());
  for (size_t i = 0; i < scores.size(); ++i) {
    weights[i] = std::exp(factor * (scores[i] - top));
  }
  return weights;
}

}  // namespace

absl::StatusOr<double> LaplaceSample(double scale, RandomStream& rng) {
  if (!(scale >= 0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "laplace scale must be nonnegative and finite, got %g", scale));
  }
  if (scale == 0.0) return 0.0;
  // Inverse CDF. u is in the open interval, so the logarithm stays finite.
  const double u = rng.Uniform() - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? -magnitude : magnitude;
}

absl::StatusOr<std::vector<double>> ExponentialMechanismProbabilities(
    std::span<const double> scores, double sensitivity, double epsilon) {
  RETURN_IF_ERROR(CheckSelectionInputs(scores, sensitivity, epsilon));
  std::vector<double> p = ShiftedWeights(scores, sensitivity, epsilon);
  double total = 0;
  for (double w : p) total += w;
  for (double& w : p) w /= total;
  return p;
}

absl::StatusOr<int64_t> ExponentialSelect(std::span<const double> scores,
                                          double sensitivity, double epsilon,
                                          RandomStream& rng) {
  RETURN_IF_ERROR(CheckSelectionInputs(scores, sensitivity, epsilon));
  if (scores.size() == 1) return 0;
  const std::vector<double> weights =
      ShiftedWeights(scores, sensitivity, epsilon);
  std::vector<double> cumulative(weights.size());
  double total = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    total += weights[i];
    cumulative[i] = total;
  }
  const double target = rng.Uniform() * total;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
  if (it == cumulative.end()) return static_cast<int64_t>(scores.size()) - 1;
  return static_cast<int64_t>(it - cumulative.begin());
}

absl::StatusOr<int64_t> ExponentialSelect(const ScoredCandidates& candidates,
                                          double epsilon, RandomStream& rng) {
  return ExponentialSelect(candidates.scores, candidates.sensitivity, epsilon,
                           rng);
}

int64_t ArgMax(std::span<const double> scores) {
  return std::max_element(scores.begin(), scores.end()) - scores.begin();
}

absl::StatusOr<StepBudget> AdvancedCompositionStepBudget(double epsilon,
                                                         double delta,
                                                         int64_t steps) {
  if (!(epsilon > 0 && epsilon < 1)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "advanced composition needs 0 < epsilon < 1, got %g", epsilon));
  }
  if (!(delta > 0 && delta < 1)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "advanced composition needs 0 < delta < 1, got %g", delta));
  }
  if (steps < 1) {
    return absl::InvalidArgumentError("advanced composition needs T >= 1");
  }
  const double t = static_cast<double>(steps);
  return StepBudget{epsilon / (2.0 * std::sqrt(2.0 * t * std::log(2.0 / delta))),
                    delta / t};
}

double PeelingNoiseScale(int64_t s, double epsilon, double delta,
                         double lambda) {
  if (lambda == 0.0) return 0.0;
  return 2.0 * lambda *
         std::sqrt(3.0 * static_cast<double>(s) * std::log(1.0 / delta)) /
         epsilon;
}

absl::StatusOr<Vector> Peeling(const Vector& v, int64_t s, double epsilon,
                               double delta, double lambda, RandomStream& rng) {
  const int64_t d = v.size();
  if (s < 1 || s > d) {
    return absl::InvalidArgumentError(
        absl::StrFormat("peeling needs 1 <= s <= d, got s=%d, d=%d", s, d));
  }
  if (!(lambda >= 0) || !std::isfinite(lambda)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("peeling lambda must be >= 0, got %g", lambda));
  }
  if (lambda > 0 && (!(epsilon > 0) || !(delta > 0 && delta < 1))) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "peeling needs epsilon > 0 and 0 < delta < 1, got (%g, %g)", epsilon,
        delta));
  }
  const double scale = PeelingNoiseScale(s, epsilon, delta, lambda);

  std::vector<bool> selected(d, false);
  std::vector<int64_t> support;
  support.reserve(s);
  std::vector<double> noise(d);
  for (int64_t round = 0; round < s; ++round) {
    for (int64_t j = 0; j < d; ++j) {
      ASSIGN_OR_RETURN(noise[j], LaplaceSample(scale, rng));
    }
    int64_t best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int64_t j = 0; j < d; ++j) {
      if (selected[j]) continue;
      const double value = std::abs(v[j]) + noise[j];
      if (best < 0 || value > best_value) {
        best = j;
        best_value = value;
      }
    }
    selected[best] = true;
    support.push_back(best);
  }

  Vector out = Vector::Zero(d);
  for (int64_t j = 0; j < d; ++j) {
    ASSIGN_OR_RETURN(noise[j], LaplaceSample(scale, rng));
  }
  for (int64_t j : support) out[j] = v[j] + noise[j];
  return out;
}

}  // namespace htdp
