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


#include "htdp/frank_wolfe.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "htdp/mechanisms.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

absl::Status CheckStart(const PolytopeDomain& domain, const Vector& w0) {
  if (domain.num_vertices() < 1) {
    return absl::InvalidArgumentError("domain has no vertices");
  }
  return domain.CheckMember(w0);
}

absl::Status CheckScheduleInputs(int64_t n, double epsilon) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive, got %g", epsilon));
  }
  return absl::OkStatus();
}

// Picks a vertex for scores u. A single vertex, or a polytope of zero
// diameter, leaves nothing to choose.
absl::StatusOr<int64_t> SelectVertex(const PolytopeDomain& domain,
                                     const std::vector<double>& scores,
                                     VertexSelection selection,
                                     double sensitivity, double epsilon,
                                     RandomStream& rng) {
  if (scores.size() == 1) return 0;
  if (selection == VertexSelection::kExactArgMax) return ArgMax(scores);
  if (domain.l1_diameter() == 0.0) return 0;
  return ExponentialSelect(scores, sensitivity, epsilon, rng);
}

void Record(const FWConfig& cfg, const Vector& w, OptimizationResult& result) {
  if (cfg.keep_iterates) result.iterates.push_back(w);
}

absl::Status RecordRisk(bool track, const LossModel& model, const Vector& w,
                        const Dataset& data, OptimizationResult& result) {
  if (!track) return absl::OkStatus();
  ASSIGN_OR_RETURN(const double risk, EmpiricalRisk(model, w, data));
  result.risk.push_back(risk);
  return absl::OkStatus();
}

// Full-data private Frank-Wolfe on `work` (already shrunk if desired); risk is
// tracked on `original`.
absl::StatusOr<OptimizationResult> RunFullDataFw(
    const Dataset& work, const Dataset& original, const PolytopeDomain& domain,
    BudgetAccountant& accountant, const FWConfig& cfg, const Vector& w0,
    RandomStream& rng) {
  RETURN_IF_ERROR(cfg.Validate());
  RETURN_IF_ERROR(CheckStart(domain, w0));
  if (!(cfg.truncation_k > 0) || !std::isfinite(cfg.truncation_k)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "truncation K must be positive and finite, got %g", cfg.truncation_k));
  }
  const double epsilon = accountant.budget().epsilon;
  const double delta = accountant.budget().delta;
  if (!(delta > 0 && delta < 1)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "full-data Frank-Wolfe is (epsilon, delta)-DP and needs 0 < delta < 1, "
        "got %g",
        delta));
  }
  const int64_t steps = cfg.iterations;
  const double n = static_cast<double>(work.num_rows());
  const double step_epsilon = LassoStepEpsilon(epsilon, delta, steps);
  const double sensitivity =
      8.0 * domain.l1_diameter() * cfg.truncation_k * cfg.truncation_k / n;
  if (cfg.selection == VertexSelection::kExactArgMax) {
    accountant.MarkNonPrivate();
  } else {
    RETURN_IF_ERROR(accountant.ChargeAdvancedComposition(
        epsilon, delta, StepBudget{step_epsilon, 0.0}, steps,
        /*log_numerator=*/1.0));
  }

  const LossModel squared = LossModel::Squared();
  OptimizationResult result;
  Vector w = w0;
  for (int64_t t = 1; t <= steps; ++t) {
    ASSIGN_OR_RETURN(const Vector g, EmpiricalGradient(squared, w, work));
    const std::vector<double> scores = domain.LinearScores(g);
    ASSIGN_OR_RETURN(const int64_t index,
                     SelectVertex(domain, scores, cfg.selection, sensitivity,
                                  step_epsilon, rng));
    domain.MoveToward(w, index, cfg.StepSize(t));
    Record(cfg, w, result);
    RETURN_IF_ERROR(RecordRisk(cfg.track_risk, squared, w, original, result));
  }
  result.w = std::move(w);
  return result;
}

}  // namespace

double FWConfig::StepSize(int64_t t) const {
  if (step_schedule == StepSchedule::kConstant) return constant_step;
  return 2.0 / (static_cast<double>(t) + 2.0);
}

absl::Status FWConfig::Validate() const {
  if (iterations < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("iterations must be >= 1, got %d", iterations));
  }
  if (step_schedule == StepSchedule::kConstant &&
      !(constant_step > 0 && constant_step <= 1)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "constant step must lie in (0, 1], got %g", constant_step));
  }
  return absl::OkStatus();
}

absl::StatusOr<OptimizationResult> HtDpFrankWolfe(
    const Dataset& data, const LossModel& model, const PolytopeDomain& domain,
    BudgetAccountant& accountant, const FWConfig& cfg, const Vector& w0,
    RandomStream& rng) {
  RETURN_IF_ERROR(cfg.Validate());
  RETURN_IF_ERROR(cfg.catoni.Validate());
  RETURN_IF_ERROR(model.Validate());
  RETURN_IF_ERROR(CheckStart(domain, w0));
  if (domain.dim() != data.dim()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "domain dimension %d does not match data dimension %d", domain.dim(),
        data.dim()));
  }
  ASSIGN_OR_RETURN(const std::vector<Dataset> blocks,
                   SplitDataset(data, cfg.iterations));
  const int64_t m = blocks.front().num_rows();
  const double epsilon = accountant.budget().epsilon;
  const double sensitivity =
      domain.l1_diameter() * RobustGradientSensitivity(cfg.catoni.scale, m);
  if (cfg.selection == VertexSelection::kExactArgMax) {
    accountant.MarkNonPrivate();
  } else {
    RETURN_IF_ERROR(
        accountant.ChargeDisjointParts(epsilon, 0.0, cfg.iterations));
  }

  OptimizationResult result;
  result.block_rows = m;
  Vector w = w0;
  for (int64_t t = 1; t <= cfg.iterations; ++t) {
    const Dataset& block = blocks[t - 1];
    result.block_offsets.push_back(block.storage_offset());
    ASSIGN_OR_RETURN(const RowMatrix grads, PerSampleGradients(model, w, block));
    ASSIGN_OR_RETURN(const Vector g, RobustGradientVector(grads, cfg.catoni));
    const std::vector<double> scores = domain.LinearScores(g);
    ASSIGN_OR_RETURN(const int64_t index,
                     SelectVertex(domain, scores, cfg.selection, sensitivity,
                                  epsilon, rng));
    domain.MoveToward(w, index, cfg.StepSize(t));
    Record(cfg, w, result);
    RETURN_IF_ERROR(RecordRisk(cfg.track_risk, model, w, data, result));
  }
  result.w = std::move(w);
  return result;
}

absl::StatusOr<OptimizationResult> DpFrankWolfeSquaredLoss(
    const Dataset& data, const PolytopeDomain& domain,
    BudgetAccountant& accountant, const FWConfig& cfg, const Vector& w0,
    RandomStream& rng) {
  return RunFullDataFw(data, data, domain, accountant, cfg, w0, rng);
}

absl::StatusOr<OptimizationResult> TruncatedDpFrankWolfeLasso(
    const Dataset& data, const PolytopeDomain& domain,
    BudgetAccountant& accountant, const FWConfig& cfg, const Vector& w0,
    RandomStream& rng) {
  if (!(cfg.truncation_k > 0) || !std::isfinite(cfg.truncation_k)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "truncation K must be positive and finite, got %g", cfg.truncation_k));
  }
  const Dataset shrunk = ShrinkDataset(data, cfg.truncation_k);
  return RunFullDataFw(shrunk, data, domain, accountant, cfg, w0, rng);
}

absl::StatusOr<OptimizationResult> NonPrivateFrankWolfe(
    const Dataset& data, const LossModel& model, const PolytopeDomain& domain,
    int64_t iterations, const Vector& w0, bool track_risk) {
  if (iterations < 1) {
    return absl::InvalidArgumentError("iterations must be >= 1");
  }
  RETURN_IF_ERROR(model.Validate());
  RETURN_IF_ERROR(CheckStart(domain, w0));
  OptimizationResult result;
  Vector w = w0;
  for (int64_t t = 1; t <= iterations; ++t) {
    ASSIGN_OR_RETURN(const Vector g, EmpiricalGradient(model, w, data));
    const std::vector<double> scores = domain.LinearScores(g);
    domain.MoveToward(w, ArgMax(scores), 2.0 / (static_cast<double>(t) + 2.0));
    RETURN_IF_ERROR(RecordRisk(track_risk, model, w, data, result));
  }
  result.w = std::move(w);
  return result;
}

double LassoStepEpsilon(double epsilon, double delta, int64_t steps) {
  return epsilon / (2.0 * std::sqrt(2.0 * static_cast<double>(steps) *
                                    std::log(1.0 / delta)));
}

int64_t FloorRationalPower(double x, int p, int q) {
  if (!(x > 0)) return 1;
  int64_t t = static_cast<int64_t>(std::floor(std::pow(x, double(p) / q)));
  const long double target = std::pow(static_cast<long double>(x), p);
  auto power = [q](int64_t v) {
    return std::pow(static_cast<long double>(v), q);
  };
  while (power(t + 1) <= target) ++t;
  while (t > 0 && power(t) > target) --t;
  return std::max<int64_t>(t, 1);
}

absl::StatusOr<FWConfig> DefaultScheduleAlg1(int64_t n, double epsilon) {
  RETURN_IF_ERROR(CheckScheduleInputs(n, epsilon));
  const double ne = static_cast<double>(n) * epsilon;
  FWConfig cfg;
  cfg.iterations = FloorRationalPower(ne, 1, 3);
  // Clamped at 1 so that n eps < 1 still yields a valid estimator scale.
  cfg.catoni.scale = std::max(1.0, std::floor(ne));
  cfg.catoni.beta = 1.0;
  cfg.step_schedule = StepSchedule::kHarmonic;
  return cfg;
}

absl::StatusOr<FWConfig> DefaultScheduleAlg2(int64_t n, double epsilon) {
  RETURN_IF_ERROR(CheckScheduleInputs(n, epsilon));
  const double ne = static_cast<double>(n) * epsilon;
  FWConfig cfg;
  cfg.iterations = FloorRationalPower(ne, 2, 5);
  cfg.truncation_k = std::pow(ne, 0.25) /
                     std::pow(static_cast<double>(cfg.iterations), 0.125);
  cfg.step_schedule = StepSchedule::kHarmonic;
  return cfg;
}

absl::StatusOr<FWConfig> ConvexScheduleAlg1(int64_t n, double epsilon,
                                            int64_t dim, int64_t num_vertices,
                                            double tau, double alpha,
                                            double zeta) {
  RETURN_IF_ERROR(CheckScheduleInputs(n, epsilon));
  if (!(tau > 0) || !(alpha > 0) || !(zeta > 0 && zeta < 1) || dim < 1 ||
      num_vertices < 1) {
    return absl::InvalidArgumentError(
        "need tau > 0, alpha > 0, 0 < zeta < 1, d >= 1 and |V| >= 1");
  }
  const double ne = static_cast<double>(n) * epsilon;
  const double vd = static_cast<double>(num_vertices) * static_cast<double>(dim);
  FWConfig cfg;
  cfg.tau = tau;
  cfg.iterations = std::max<int64_t>(
      1, static_cast<int64_t>(std::floor(
             std::cbrt(ne * alpha * alpha / (tau * std::log(vd / zeta))))));
  const double t = static_cast<double>(cfg.iterations);
  cfg.catoni.scale = std::sqrt(ne * tau / (t * std::log(vd * t / zeta)));
  cfg.catoni.beta = 1.0;
  cfg.step_schedule = StepSchedule::kHarmonic;
  return cfg;
}

absl::StatusOr<FWConfig> RobustRegressionScheduleAlg1(int64_t n, double epsilon,
                                                      int64_t dim, double zeta) {
  RETURN_IF_ERROR(CheckScheduleInputs(n, epsilon));
  if (!(zeta > 0 && zeta < 1) || dim < 1) {
    return absl::InvalidArgumentError("need 0 < zeta < 1 and d >= 1");
  }
  const double ne = static_cast<double>(n) * epsilon;
  const double d = static_cast<double>(dim);
  FWConfig cfg;
  cfg.iterations = std::max<int64_t>(
      1, static_cast<int64_t>(std::floor(std::sqrt(ne / std::log(d / zeta)))));
  const double t = static_cast<double>(cfg.iterations);
  cfg.catoni.scale = std::sqrt(ne) / std::sqrt(t * std::log(d * t / zeta));
  cfg.catoni.beta = 1.0;
  cfg.step_schedule = StepSchedule::kConstant;
  cfg.constant_step = 1.0 / std::sqrt(t);
  return cfg;
}

absl::StatusOr<FWConfig> RateScheduleAlg2(int64_t n, double epsilon,
                                          double delta, int64_t dim,
                                          double lambda_max, double zeta) {
  RETURN_IF_ERROR(CheckScheduleInputs(n, epsilon));
  if (!(delta > 0 && delta < 1) || !(zeta > 0 && zeta < 1) || dim < 1 ||
      !(lambda_max > 0)) {
    return absl::InvalidArgumentError(
        "need 0 < delta < 1, 0 < zeta < 1, d >= 1 and lambda_max > 0");
  }
  const double ne = static_cast<double>(n) * epsilon;
  const double d = static_cast<double>(dim);
  int64_t t = 1;
  for (int iter = 0; iter < 50; ++iter) {
    // log(d T / zeta) can drop below 1 for tiny inputs; keep it at least 1.
    const double log_term = std::max(1.0, std::log(d * t / zeta));
    const double base =
        std::sqrt(ne) * lambda_max / (std::sqrt(std::log(1.0 / delta)) * log_term);
    const int64_t next = std::max<int64_t>(
        1, static_cast<int64_t>(std::floor(std::pow(base, 0.8))));
    if (next == t) break;
    t = next;
  }
  FWConfig cfg;
  cfg.iterations = t;
  cfg.truncation_k =
      std::pow(ne, 0.25) / std::pow(static_cast<double>(t), 0.125);
  cfg.step_schedule = StepSchedule::kHarmonic;
  return cfg;
}

}  // namespace htdp
