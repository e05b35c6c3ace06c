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


#include "htdp/losses.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

// log(1 + exp(z)) without overflow.
double Softplus(double z) {
  return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z)));
}

// 1 / (1 + exp(-z)).
double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

absl::Status CheckLabel(const LossModel& model, double y) {
  if (model.kind == LossKind::kLogisticL2 && y != 1.0 && y != -1.0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("logistic loss needs labels in {-1, +1}, got %g", y));
  }
  return absl::OkStatus();
}

absl::Status CheckDims(const Vector& w, int64_t dim) {
  if (w.size() != dim) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "parameter has dimension %d, data has %d", w.size(), dim));
  }
  return absl::OkStatus();
}

// d loss / d <x, w> for the margin-based kinds.
double LinkDerivative(const LossModel& model, double margin, double y) {
  switch (model.kind) {
    case LossKind::kSquared:
      return 2.0 * (margin - y);
    case LossKind::kLogisticL2:
      return -y * Sigmoid(-y * margin);
    case LossKind::kBiweight:
      return BiweightDerivative(margin - y, model.biweight_c);
    case LossKind::kMeanEstimation:
      break;
  }
  return 0.0;
}

}  // namespace

absl::Status LossModel::Validate() const {
  if (!(reg_lambda >= 0) || !std::isfinite(reg_lambda)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("reg_lambda must be >= 0, got %g", reg_lambda));
  }
  if (!(biweight_c > 0) || !std::isfinite(biweight_c)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("biweight c must be > 0, got %g", biweight_c));
  }
  return absl::OkStatus();
}

const char* LossKindName(LossKind kind) {
  switch (kind) {
    case LossKind::kSquared:
      return "squared";
    case LossKind::kLogisticL2:
      return "logistic_l2";
    case LossKind::kBiweight:
      return "biweight";
    case LossKind::kMeanEstimation:
      return "mean";
  }
  return "unknown";
}

absl::StatusOr<LossKind> ParseLossKind(const std::string& name) {
  for (LossKind kind : {LossKind::kSquared, LossKind::kLogisticL2,
                        LossKind::kBiweight, LossKind::kMeanEstimation}) {
    if (name == LossKindName(kind)) return kind;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown loss '%s' (squared, logistic_l2, biweight, mean)", name));
}

double BiweightDerivative(double t, double c) {
  if (std::abs(t) > c) return 0.0;
  const double r = t / c;
  const double q = 1.0 - r * r;
  return t * q * q;
}

double BiweightValue(double t, double c) {
  const double cap = c * c / 6.0;
  if (std::abs(t) >= c) return cap;
  const double r = t / c;
  const double q = 1.0 - r * r;
  return cap * (1.0 - q * q * q);
}

absl::StatusOr<double> LossValue(const LossModel& model, const Vector& w,
                                 const Eigen::Ref<const Vector>& x, double y) {
  RETURN_IF_ERROR(CheckDims(w, x.size()));
  RETURN_IF_ERROR(CheckLabel(model, y));
  switch (model.kind) {
    case LossKind::kSquared: {
      const double r = x.dot(w) - y;
      return r * r;
    }
    case LossKind::kLogisticL2:
      return Softplus(-y * x.dot(w)) + 0.5 * model.reg_lambda * w.squaredNorm();
    case LossKind::kBiweight:
      return BiweightValue(x.dot(w) - y, model.biweight_c);
    case LossKind::kMeanEstimation:
      return (x - w).squaredNorm();
  }
  return absl::InternalError("unhandled loss kind");
}

absl::StatusOr<Vector> PerSampleGradient(const LossModel& model, const Vector& w,
                                         const Eigen::Ref<const Vector>& x,
                                         double y) {
  RETURN_IF_ERROR(CheckDims(w, x.size()));
  RETURN_IF_ERROR(CheckLabel(model, y));
  if (model.kind == LossKind::kMeanEstimation) return Vector(2.0 * (w - x));
  Vector g = LinkDerivative(model, x.dot(w), y) * x;
  if (model.kind == LossKind::kLogisticL2) g += model.reg_lambda * w;
  return g;
}

absl::StatusOr<RowMatrix> PerSampleGradients(const LossModel& model,
                                             const Vector& w,
                                             const Dataset& data) {
  RETURN_IF_ERROR(CheckDims(w, data.dim()));
  const auto x = data.features();
  const auto y = data.responses();
  if (model.kind == LossKind::kMeanEstimation) {
    RowMatrix g = (-2.0) * x;
    g.rowwise() += 2.0 * w.transpose();
    return g;
  }
  const Vector margins = x * w;
  Vector coeff(data.num_rows());
  for (int64_t i = 0; i < data.num_rows(); ++i) {
    RETURN_IF_ERROR(CheckLabel(model, y[i]));
    coeff[i] = LinkDerivative(model, margins[i], y[i]);
  }
  RowMatrix g = coeff.asDiagonal() * x;
  if (model.kind == LossKind::kLogisticL2 && model.reg_lambda != 0.0) {
    g.rowwise() += model.reg_lambda * w.transpose();
  }
  return g;
}

absl::StatusOr<double> EmpiricalRisk(const LossModel& model, const Vector& w,
                                     const Dataset& data) {
  RETURN_IF_ERROR(CheckDims(w, data.dim()));
  const auto x = data.features();
  const auto y = data.responses();
  const int64_t n = data.num_rows();
  double total = 0;
  if (model.kind == LossKind::kMeanEstimation) {
    for (int64_t i = 0; i < n; ++i) total += (x.row(i).transpose() - w).squaredNorm();
    return total / static_cast<double>(n);
  }
  const Vector margins = x * w;
  for (int64_t i = 0; i < n; ++i) {
    RETURN_IF_ERROR(CheckLabel(model, y[i]));
    switch (model.kind) {
      case LossKind::kSquared: {
        const double r = margins[i] - y[i];
        total += r * r;
        break;
      }
      case LossKind::kLogisticL2:
        total += Softplus(-y[i] * margins[i]);
        break;
      case LossKind::kBiweight:
        total += BiweightValue(margins[i] - y[i], model.biweight_c);
        break;
      case LossKind::kMeanEstimation:
        break;
    }
  }
  double risk = total / static_cast<double>(n);
  if (model.kind == LossKind::kLogisticL2) {
    risk += 0.5 * model.reg_lambda * w.squaredNorm();
  }
  return risk;
}

absl::StatusOr<Vector> EmpiricalGradient(const LossModel& model,
                                         const Vector& w, const Dataset& data) {
  RETURN_IF_ERROR(CheckDims(w, data.dim()));
  const auto x = data.features();
  const auto y = data.responses();
  const double n = static_cast<double>(data.num_rows());
  if (model.kind == LossKind::kMeanEstimation) {
    return Vector(2.0 * (w - x.colwise().sum().transpose() / n));
  }
  const Vector margins = x * w;
  Vector coeff(data.num_rows());
  for (int64_t i = 0; i < data.num_rows(); ++i) {
    RETURN_IF_ERROR(CheckLabel(model, y[i]));
    coeff[i] = LinkDerivative(model, margins[i], y[i]);
  }
  Vector g = x.transpose() * coeff / n;
  if (model.kind == LossKind::kLogisticL2) g += model.reg_lambda * w;
  return g;
}

}  // namespace htdp
