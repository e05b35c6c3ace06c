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

#include "htdp/robust_mean.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "absl/strings/str_format.h"

namespace htdp {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

// Beyond this |V| both Phi(-V) and exp(-V^2/2) are below 1e-300.
constexpr double kTailCutoff = 38.0;

// Above this |a| the polynomial part a(1 - b^2/2) - a^3/6 and the correction
// cancel to within a few ulps of a^3, so the expectation is evaluated from its
// definition instead.
constexpr double kClosedFormLimit = 64.0;

struct TailTerms {
  double f;   // Phi(-v)
  double e;   // exp(-v^2 / 2)
  double ve;  // v * e
  double v2e; // v^2 * e
};

TailTerms Tail(double v) {
  if (v > kTailCutoff) return {0.0, 0.0, 0.0, 0.0};
  if (v < -kTailCutoff) return {1.0, 0.0, 0.0, 0.0};
  const double e = std::exp(-0.5 * v * v);
  return {NormalCdf(-v), e, v * e, v * v * e};
}

// 64-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  static constexpr int kNodes = 64;
  std::array<double, kNodes> x;
  std::array<double, kNodes> w;

  GaussLegendre() {
    for (int i = 0; i < kNodes; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (kNodes + 0.5));
      double dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int k = 1; k <= kNodes; ++k) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = kNodes * (z * p0 - p1) / (z * z - 1.0);
        const double step = p0 / dp;
        z -= step;
        if (std::abs(step) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

// E[Phi(a + b z)] split into the two saturated tails plus the cubic part on
// [-sqrt 2, sqrt 2], integrated in u = a + b z. Used for large |a|.
double SmoothedPhiByQuadrature(double a, double b) {
  static const GaussLegendre rule;
  const double upper_tail = NormalCdf(-(kSqrt2 - a) / b);  // P(u > sqrt 2)
  const double lower_tail = NormalCdf(-(kSqrt2 + a) / b);  // P(u < -sqrt 2)
  double middle = 0;
  for (int i = 0; i < GaussLegendre::kNodes; ++i) {
    const double u = kSqrt2 * rule.x[i];
    const double z = (u - a) / b;
    middle += rule.w[i] * (u - u * u * u / 6.0) * std::exp(-0.5 * z * z);
  }
  middle *= kSqrt2 * kInvSqrt2Pi / b;
  return kPhiBound * (upper_tail - lower_tail) + middle;
}

}  // namespace

absl::Status CatoniParams::Validate() const {
  if (!(scale > 0) || !std::isfinite(scale)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("catoni scale must be positive, got %g", scale));
  }
  if (!(beta > 0) || !std::isfinite(beta)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("catoni beta must be positive, got %g", beta));
  }
  return absl::OkStatus();
}

double Phi(double x) {
  if (x > kSqrt2) return kPhiBound;
  if (x < -kSqrt2) return -kPhiBound;
  return x - x * x * x / 6.0;
}

double NormalCdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double CorrectionC(double a, double b) {
  if (b == 0.0) {
    if (std::abs(a) <= kSqrt2) return 0.0;
    return Phi(a) - (a - a * a * a / 6.0);
  }
  const double v_minus = (kSqrt2 - a) / b;
  const double v_plus = (kSqrt2 + a) / b;
  const TailTerms m = Tail(v_minus);
  const TailTerms p = Tail(v_plus);

  const double t1 = kPhiBound * (m.f - p.f);
  const double t2 = -(a - a * a * a / 6.0) * (m.f + p.f);
  const double t3 = b * kInvSqrt2Pi * (1.0 - 0.5 * a * a) * (p.e - m.e);
  const double t4 = 0.5 * a * b * b * (p.f + m.f + kInvSqrt2Pi * (p.ve + m.ve));
  const double t5 = b * b * b * kInvSqrt2Pi / 6.0 *
                    ((2.0 * m.e + m.v2e) - (2.0 * p.e + p.v2e));
  return t1 + t2 + t3 + t4 + t5;
}

double SmoothedPhiExpectation(double a, double b) {
  if (b == 0.0) return Phi(a);
  double value;
  if (std::abs(a) > kClosedFormLimit) {
    value = SmoothedPhiByQuadrature(a, b);
  } else {
    value = a * (1.0 - 0.5 * b * b) - a * a * a / 6.0 + CorrectionC(a, b);
  }
  // The exact expectation lies in [-bound, bound]; clip round-off so the
  // sensitivity bound holds exactly.
  return std::clamp(value, -kPhiBound, kPhiBound);
}

absl::StatusOr<double> RobustMean1D(std::span<const double> samples,
                                    const CatoniParams& params) {
  if (samples.empty()) {
    return absl::InvalidArgumentError("robust mean of an empty sample");
  }
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  const double b_scale = params.scale * std::sqrt(params.beta);
  double sum = 0;
  for (double x : samples) {
    sum += SmoothedPhiExpectation(x / params.scale, std::abs(x) / b_scale);
  }
  return sum * (params.scale / static_cast<double>(samples.size()));
}

absl::StatusOr<Vector> RobustGradientVector(const RowMatrix& grads,
                                            const CatoniParams& params) {
  if (grads.rows() < 1 || grads.cols() < 1) {
    return absl::InvalidArgumentError("robust gradient of an empty matrix");
  }
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  const double b_scale = params.scale * std::sqrt(params.beta);
  Vector sums = Vector::Zero(grads.cols());
  // Row-major traversal; each row updates every coordinate's running sum.
  for (Eigen::Index i = 0; i < grads.rows(); ++i) {
    for (Eigen::Index j = 0; j < grads.cols(); ++j) {
      const double x = grads(i, j);
      sums[j] += SmoothedPhiExpectation(x / params.scale, std::abs(x) / b_scale);
    }
  }
  return sums * (params.scale / static_cast<double>(grads.rows()));
}

}  // namespace htdp
