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


#include "htdp/sparse_iht.h"

#include <cmath>
#include <vector>

#include "absl/strings/str_format.h"
#include "htdp/mechanisms.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

int64_t CountNonZeros(const Vector& w) {
  int64_t count = 0;
  for (Eigen::Index j = 0; j < w.size(); ++j) count += (w[j] != 0.0);
  return count;
}

absl::Status CheckStart(const Vector& w1, int64_t dim, int64_t s) {
  if (w1.size() != dim) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "initial vector has dimension %d, data has %d", w1.size(), dim));
  }
  if (CountNonZeros(w1) > s) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "initial vector has %d nonzeros, more than s = %d", CountNonZeros(w1),
        s));
  }
  return absl::OkStatus();
}

// Charges the whole budget once, or marks the run non-private.
absl::Status ChargeBlocks(BudgetAccountant& accountant, const IHTConfig& cfg) {
  if (cfg.noiseless || cfg.exact_gradients) {
    accountant.MarkNonPrivate();
    return absl::OkStatus();
  }
  const PrivacyBudget& budget = accountant.budget();
  if (!(budget.delta > 0 && budget.delta < 1)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "sparse learners are (epsilon, delta)-DP and need 0 < delta < 1, got %g",
        budget.delta));
  }
  return accountant.ChargeDisjointParts(budget.epsilon, budget.delta,
                                        cfg.iterations);
}

absl::Status Track(const IHTConfig& cfg, const LossModel& model,
                   const Vector& w, const Dataset& data,
                   OptimizationResult& result) {
  if (cfg.keep_iterates) result.iterates.push_back(w);
  if (!cfg.track_risk) return absl::OkStatus();
  ASSIGN_OR_RETURN(const double risk, EmpiricalRisk(model, w, data));
  result.risk.push_back(risk);
  return absl::OkStatus();
}

}  // namespace

absl::Status IHTConfig::Validate(int64_t dim) const {
  if (iterations < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("iterations must be >= 1, got %d", iterations));
  }
  if (working_sparsity < 1 || working_sparsity > dim) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "working sparsity must lie in [1, d = %d], got %d", dim,
        working_sparsity));
  }
  if (!(step > 0) || !std::isfinite(step)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("step must be positive, got %g", step));
  }
  return absl::OkStatus();
}

double SparseLinearLambda(double k, double step, int64_t s, int64_t m) {
  return 2.0 * k * k * step * (std::sqrt(static_cast<double>(s)) + 1.0) /
         static_cast<double>(m);
}

double SparseOptLambda(double k, double step, int64_t m) {
  return 4.0 * std::sqrt(2.0) * k * step / static_cast<double>(m);
}

absl::StatusOr<OptimizationResult> HtSparseLinear(const Dataset& data,
                                                  BudgetAccountant& accountant,
                                                  const IHTConfig& cfg,
                                                  const Vector& w1,
                                                  RandomStream& rng) {
  RETURN_IF_ERROR(cfg.Validate(data.dim()));
  RETURN_IF_ERROR(CheckStart(w1, data.dim(), cfg.working_sparsity));
  if (w1.norm() > 1.0 + 1e-9) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "initial vector has l2 norm %g, outside the unit ball", w1.norm()));
  }
  if (!(cfg.truncation_k > 0) || !std::isfinite(cfg.truncation_k)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "truncation K must be positive and finite, got %g", cfg.truncation_k));
  }
  const Dataset shrunk = ShrinkDataset(data, cfg.truncation_k);
  ASSIGN_OR_RETURN(const std::vector<Dataset> blocks,
                   SplitDataset(shrunk, cfg.iterations));
  RETURN_IF_ERROR(ChargeBlocks(accountant, cfg));

  const int64_t m = blocks.front().num_rows();
  const int64_t s = cfg.working_sparsity;
  const double lambda =
      cfg.noiseless ? 0.0 : SparseLinearLambda(cfg.truncation_k, cfg.step, s, m);
  const PrivacyBudget& budget = accountant.budget();
  const LossModel squared = LossModel::Squared();

  OptimizationResult result;
  result.block_rows = m;
  Vector w = w1;
  for (const Dataset& block : blocks) {
    result.block_offsets.push_back(block.storage_offset());
    const auto x = block.features();
    const Vector residual = x * w - block.responses();
    const Vector half =
        w - (cfg.step / static_cast<double>(m)) * (x.transpose() * residual);
    ASSIGN_OR_RETURN(const Vector peeled,
                     Peeling(half, s, budget.epsilon, budget.delta, lambda, rng));
    w = ProjectL2Ball(peeled, 1.0);
    RETURN_IF_ERROR(Track(cfg, squared, w, data, result));
  }
  result.w = std::move(w);
  return result;
}

absl::StatusOr<OptimizationResult> HtSparseOpt(const Dataset& data,
                                               const LossModel& model,
                                               BudgetAccountant& accountant,
                                               const IHTConfig& cfg,
                                               const Vector& w1,
                                               RandomStream& rng) {
  RETURN_IF_ERROR(cfg.Validate(data.dim()));
  RETURN_IF_ERROR(cfg.catoni.Validate());
  RETURN_IF_ERROR(model.Validate());
  RETURN_IF_ERROR(CheckStart(w1, data.dim(), cfg.working_sparsity));
  ASSIGN_OR_RETURN(const std::vector<Dataset> blocks,
                   SplitDataset(data, cfg.iterations));
  RETURN_IF_ERROR(ChargeBlocks(accountant, cfg));

  const int64_t m = blocks.front().num_rows();
  const int64_t s = cfg.working_sparsity;
  const double lambda =
      cfg.noiseless ? 0.0 : SparseOptLambda(cfg.catoni.scale, cfg.step, m);
  const PrivacyBudget& budget = accountant.budget();

  OptimizationResult result;
  result.block_rows = m;
  Vector w = w1;
  for (const Dataset& block : blocks) {
    result.block_offsets.push_back(block.storage_offset());
    Vector g;
    if (cfg.exact_gradients) {
      ASSIGN_OR_RETURN(g, EmpiricalGradient(model, w, block));
    } else {
      ASSIGN_OR_RETURN(const RowMatrix grads,
                       PerSampleGradients(model, w, block));
      ASSIGN_OR_RETURN(g, RobustGradientVector(grads, cfg.catoni));
    }
    const Vector half = w - cfg.step * g;
    ASSIGN_OR_RETURN(w,
                     Peeling(half, s, budget.epsilon, budget.delta, lambda, rng));
    RETURN_IF_ERROR(Track(cfg, model, w, data, result));
  }
  result.w = std::move(w);
  return result;
}

namespace {

absl::Status CheckSparseScheduleInputs(int64_t n, double epsilon,
                                       int64_t s_star) {
  if (n < 3) return absl::InvalidArgumentError("n must be >= 3");
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive, got %g", epsilon));
  }
  if (s_star < 1) return absl::InvalidArgumentError("s* must be >= 1");
  return absl::OkStatus();
}

int64_t LogIterations(int64_t n, double factor) {
  return std::max<int64_t>(
      1, static_cast<int64_t>(
             std::floor(factor * std::log(static_cast<double>(n)))));
}

}  // namespace

absl::StatusOr<IHTConfig> DefaultScheduleAlg3(int64_t n, double epsilon,
                                              int64_t s_star, int64_t c_mult) {
  RETURN_IF_ERROR(CheckSparseScheduleInputs(n, epsilon, s_star));
  if (c_mult < 1) return absl::InvalidArgumentError("c must be >= 1");
  IHTConfig cfg;
  cfg.working_sparsity = c_mult * s_star;
  cfg.iterations = LogIterations(n, 1.0);
  cfg.truncation_k = std::pow(
      static_cast<double>(n) * epsilon /
          static_cast<double>(cfg.working_sparsity * cfg.iterations),
      0.25);
  cfg.step = 0.5;
  return cfg;
}

absl::StatusOr<IHTConfig> DefaultScheduleAlg5(int64_t n, double epsilon,
                                              int64_t s_star, double c2) {
  RETURN_IF_ERROR(CheckSparseScheduleInputs(n, epsilon, s_star));
  if (!(c2 > 0)) return absl::InvalidArgumentError("c2 must be > 0");
  IHTConfig cfg;
  cfg.working_sparsity = 2 * s_star;
  cfg.iterations = LogIterations(n, 1.0);
  cfg.catoni.scale = c2 * static_cast<double>(n) * epsilon;
  cfg.catoni.beta = 1.0;
  cfg.step = 0.5;
  return cfg;
}

absl::StatusOr<IHTConfig> RateScheduleAlg3(int64_t n, double epsilon,
                                           int64_t s_star, double gamma,
                                           double mu) {
  RETURN_IF_ERROR(CheckSparseScheduleInputs(n, epsilon, s_star));
  if (!(gamma > 0) || !(mu > 0) || mu > gamma) {
    return absl::InvalidArgumentError("need 0 < mu <= gamma");
  }
  const double kappa = gamma / mu;
  IHTConfig cfg;
  cfg.iterations = LogIterations(n, kappa);
  cfg.working_sparsity = static_cast<int64_t>(
      std::ceil(72.0 * kappa * kappa * static_cast<double>(s_star)));
  cfg.truncation_k = std::pow(
      static_cast<double>(n) * epsilon /
          static_cast<double>(cfg.working_sparsity * cfg.iterations),
      0.25);
  cfg.step = 2.0 / (3.0 * gamma);
  return cfg;
}

absl::StatusOr<IHTConfig> RateScheduleAlg5(int64_t n, double epsilon,
                                           int64_t s_star, double gamma,
                                           double mu, double tau) {
  RETURN_IF_ERROR(CheckSparseScheduleInputs(n, epsilon, s_star));
  if (!(gamma > 0) || !(mu > 0) || mu > gamma || !(tau > 0)) {
    return absl::InvalidArgumentError("need 0 < mu <= gamma and tau > 0");
  }
  const double kappa = gamma / mu;
  IHTConfig cfg;
  cfg.iterations = LogIterations(n, kappa);
  cfg.working_sparsity = static_cast<int64_t>(
      std::ceil(kappa * kappa * static_cast<double>(s_star)));
  cfg.catoni.scale = std::sqrt(static_cast<double>(n) * epsilon * tau);
  cfg.catoni.beta = 1.0;
  cfg.step = 2.0 / (3.0 * gamma);
  return cfg;
}

}  // namespace htdp
