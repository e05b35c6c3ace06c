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

#include "htdp/privacy_budget.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"

namespace htdp {
namespace {

// Relative slack for floating-point round-off when summing charges.
constexpr double kRoundOff = 1e-12;

bool Exceeds(double total, double limit) {
  return total > limit * (1.0 + kRoundOff);
}

}  // namespace

absl::StatusOr<PrivacyBudget> PrivacyBudget::Create(double epsilon,
                                                    double delta) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive and finite, got %g", epsilon));
  }
  if (!(delta >= 0 && delta < 1)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("delta must lie in [0, 1), got %g", delta));
  }
  return PrivacyBudget{epsilon, delta, 0, 0};
}

StepBudget RecomposeAdvanced(StepBudget step, int64_t steps,
                             double delta_slack, double log_numerator) {
  const double t = static_cast<double>(steps);
  return StepBudget{
      step.epsilon * 2.0 * std::sqrt(2.0 * t * std::log(log_numerator / delta_slack)),
      t * step.delta + delta_slack};
}

absl::Status BudgetAccountant::Charge(double epsilon, double delta) {
  return Spend(CompositionRule::kSequential, epsilon, delta, 1);
}

absl::Status BudgetAccountant::ChargeDisjointParts(double epsilon, double delta,
                                                   int64_t parts) {
  if (parts < 1) return absl::InvalidArgumentError("parts must be >= 1");
  return Spend(CompositionRule::kDisjointParts, epsilon, delta, parts);
}

absl::Status BudgetAccountant::ChargeAdvancedComposition(
    double target_epsilon, double target_delta, StepBudget step, int64_t steps,
    double log_numerator) {
  if (steps < 1) return absl::InvalidArgumentError("steps must be >= 1");
  if (!(target_delta > 0 && target_delta < 1)) {
    return absl::InvalidArgumentError(
        "advanced composition needs 0 < delta < 1");
  }
  const StepBudget total =
      RecomposeAdvanced(step, steps, target_delta - steps * step.delta,
                        log_numerator);
  if (Exceeds(total.epsilon, target_epsilon) ||
      Exceeds(total.delta, target_delta)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%d steps at (%g, %g) compose to (%g, %g), above target (%g, %g)",
        steps, step.epsilon, step.delta, total.epsilon, total.delta,
        target_epsilon, target_delta));
  }
  return Spend(CompositionRule::kAdvanced, target_epsilon, target_delta, steps);
}

double BudgetAccountant::reported_epsilon() const {
  return non_private_ ? std::numeric_limits<double>::infinity()
                      : budget_.spent_epsilon;
}

std::string BudgetAccountant::DebugString() const {
  return absl::StrFormat("spent (%.10g, %.10g) of (%.10g, %.10g)%s",
                         budget_.spent_epsilon, budget_.spent_delta,
                         budget_.epsilon, budget_.delta,
                         non_private_ ? " [non-private debug run]" : "");
}

absl::Status BudgetAccountant::Spend(CompositionRule rule, double epsilon,
                                     double delta, int64_t mechanisms) {
  if (!(epsilon >= 0) || !(delta >= 0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("invalid charge (%g, %g)", epsilon, delta));
  }
  const double eps_total = budget_.spent_epsilon + epsilon;
  const double delta_total = budget_.spent_delta + delta;
  if (Exceeds(eps_total, budget_.epsilon) ||
      Exceeds(delta_total, budget_.delta)) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "charge (%g, %g) would exceed budget: %s", epsilon, delta,
        DebugString()));
  }
  budget_.spent_epsilon = eps_total;
  budget_.spent_delta = delta_total;
  entries_.push_back(Entry{rule, epsilon, delta, mechanisms});
  return absl::OkStatus();
}

}  // namespace htdp
