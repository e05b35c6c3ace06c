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

#ifndef HTDP_PRIVACY_BUDGET_H_
#define HTDP_PRIVACY_BUDGET_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace htdp {

// Declared (epsilon, delta) and what has been spent against it.
struct PrivacyBudget {
  double epsilon = 0;
  double delta = 0;
  double spent_epsilon = 0;
  double spent_delta = 0;

  // epsilon > 0 and finite, 0 <= delta < 1. delta = 0 is pure DP.
  static absl::StatusOr<PrivacyBudget> Create(double epsilon, double delta);
};

// Per-mechanism budget handed to each of a sequence of mechanisms.
struct StepBudget {
  double epsilon = 0;
  double delta = 0;
};

// Total (epsilon, delta) certified for `steps` mechanisms at `step` each by
// advanced composition: epsilon = step.epsilon * 2 sqrt(2 T ln(c / slack)),
// delta = T step.delta + slack, with c the numerator inside the logarithm
// (c = 2 in the textbook statement).
StepBudget RecomposeAdvanced(StepBudget step, int64_t steps,
                             double delta_slack, double log_numerator);

enum class CompositionRule {
  // Mechanisms applied one after another to the same data; costs add up.
  kSequential,
  // One mechanism per disjoint block of the data; the whole run costs one
  // block's budget.
  kDisjointParts,
  // T mechanisms on the same data composed by advanced composition.
  kAdvanced,
};

// Single-writer ledger that refuses any charge exceeding the declared budget.
// Errors are ResourceExhausted for overspend, InvalidArgument for malformed
// charges.
class BudgetAccountant {
 public:
  struct Entry {
    CompositionRule rule;
    double epsilon;
    double delta;
    int64_t mechanisms;
  };

  explicit BudgetAccountant(PrivacyBudget budget) : budget_(budget) {}

  const PrivacyBudget& budget() const { return budget_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Basic composition.
  absl::Status Charge(double epsilon, double delta);

  // `parts` mechanisms, each (epsilon, delta)-DP and each reading a disjoint
  // block of rows. Parallel composition charges (epsilon, delta) once.
  absl::Status ChargeDisjointParts(double epsilon, double delta, int64_t parts);

  // Charges (target_epsilon, target_delta) for `steps` mechanisms at `step`
  // after checking that advanced composition of the steps stays within the
  // target.
  absl::Status ChargeAdvancedComposition(double target_epsilon,
                                         double target_delta, StepBudget step,
                                         int64_t steps, double log_numerator);

  // Records that a run used a noise-free debug path. The run carries no
  // privacy guarantee and reported_epsilon() becomes +infinity.
  void MarkNonPrivate() { non_private_ = true; }
  bool non_private() const { return non_private_; }
  double reported_epsilon() const;

  std::string DebugString() const;

 private:
  absl::Status Spend(CompositionRule rule, double epsilon, double delta,
                     int64_t mechanisms);

  PrivacyBudget budget_;
  std::vector<Entry> entries_;
  bool non_private_ = false;
};

}  // namespace htdp

#endif  // HTDP_PRIVACY_BUDGET_H_
