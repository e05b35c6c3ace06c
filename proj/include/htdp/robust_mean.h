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

// Catoni-style mean estimation for heavy-tailed samples.
//
// Each sample x is rescaled by `scale`, multiplied by (1 + eta) with
// eta ~ N(0, 1/beta), passed through the bounded influence function Phi and
// averaged back at the original scale. The expectation over eta is taken in
// closed form, so the estimator is deterministic:
//
//   estimate = (scale / n) * sum_i E_z[Phi(a_i + b_i z)],
//   a_i = x_i / scale,  b_i = |x_i| / (scale sqrt(beta)),  z ~ N(0, 1).
//
// Because |Phi| <= 2 sqrt(2) / 3, replacing one sample moves the estimate by
// at most 4 sqrt(2) scale / (3 n).

#ifndef HTDP_ROBUST_MEAN_H_
#define HTDP_ROBUST_MEAN_H_

#include <span>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "htdp/dataset.h"

namespace htdp {

struct CatoniParams {
  double scale = 1.0;
  double beta = 1.0;

  absl::Status Validate() const;
};

// 2 sqrt(2) / 3, the saturation level of Phi.
inline constexpr double kPhiBound = 0.94280904158206336587;

// x - x^3/6 on [-sqrt 2, sqrt 2], saturating at +-2 sqrt(2)/3 outside.
double Phi(double x);

// Standard normal CDF via erfc; keeps full relative accuracy in the lower tail.
double NormalCdf(double x);

// Correction term C(a, b) such that
//   E_z[Phi(a + b z)] = a (1 - b^2 / 2) - a^3 / 6 + C(a, b).
// Requires b >= 0; at b = 0 returns the limit (0 when |a| <= sqrt 2).
double CorrectionC(double a, double b);

// E_{z ~ N(0,1)}[Phi(a + b z)]. Requires b >= 0; b = 0 gives Phi(a).
double SmoothedPhiExpectation(double a, double b);

// Estimate of the mean of `samples`. Errors on an empty sample.
absl::StatusOr<double> RobustMean1D(std::span<const double> samples,
                                    const CatoniParams& params);

// Column-wise RobustMean1D of an m x d matrix of per-sample gradients.
absl::StatusOr<Vector> RobustGradientVector(const RowMatrix& grads,
                                            const CatoniParams& params);

// l-infinity sensitivity of RobustGradientVector over m rows.
inline double RobustGradientSensitivity(double scale, int64_t m) {
  return 2.0 * kPhiBound * scale / static_cast<double>(m);
}

}  // namespace htdp

#endif  // HTDP_ROBUST_MEAN_H_
