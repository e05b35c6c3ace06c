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


#ifndef HTDP_LOSSES_H_
#define HTDP_LOSSES_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "htdp/dataset.h"

namespace htdp {

enum class LossKind {
  // (<x, w> - y)^2
  kSquared,
  // log(1 + exp(-y <w, x>)) + (lambda / 2) ||w||^2 with y in {-1, +1}.
  kLogisticL2,
  // Tukey biweight psi(<x, w> - y) with cutoff c.
  kBiweight,
  // ||x - w||^2; the response is ignored. Sparse mean estimation.
  kMeanEstimation,
};

struct LossModel {
  LossKind kind = LossKind::kSquared;
  double reg_lambda = 0.0;
  double biweight_c = 1.0;

  static LossModel Squared() { return {LossKind::kSquared, 0.0, 1.0}; }
  static LossModel LogisticL2(double reg_lambda) {
    return {LossKind::kLogisticL2, reg_lambda, 1.0};
  }
  static LossModel Biweight(double c = 1.0) {
    return {LossKind::kBiweight, 0.0, c};
  }
  static LossModel MeanEstimation() {
    return {LossKind::kMeanEstimation, 0.0, 1.0};
  }

  absl::Status Validate() const;
};

const char* LossKindName(LossKind kind);
absl::StatusOr<LossKind> ParseLossKind(const std::string& name);

// psi'(t) = t (1 - (t/c)^2)^2 for |t| <= c, else 0.
double BiweightDerivative(double t, double c);

// (c^2 / 6) (1 - (1 - (t/c)^2)^3) for |t| <= c, else c^2 / 6.
double BiweightValue(double t, double c);

absl::StatusOr<double> LossValue(const LossModel& model, const Vector& w,
                                 const Eigen::Ref<const Vector>& x, double y);

absl::StatusOr<Vector> PerSampleGradient(const LossModel& model, const Vector& w,
                                         const Eigen::Ref<const Vector>& x,
                                         double y);

// Row i holds the gradient of the loss at sample i of `data`.
absl::StatusOr<RowMatrix> PerSampleGradients(const LossModel& model,
                                             const Vector& w,
                                             const Dataset& data);

// Mean loss over the rows of `data`.
absl::StatusOr<double> EmpiricalRisk(const LossModel& model, const Vector& w,
                                     const Dataset& data);

// Mean per-sample gradient over the rows of `data`.
absl::StatusOr<Vector> EmpiricalGradient(const LossModel& model,
                                         const Vector& w, const Dataset& data);

}  // namespace htdp

#endif  // HTDP_LOSSES_H_
