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


#ifndef HTDP_DATAGEN_H_
#define HTDP_DATAGEN_H_

#include <cstdint>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "htdp/dataset.h"
#include "htdp/random_stream.h"

namespace htdp {

enum class FeatureKind { kLognormal, kStudentT, kGaussian, kLaplace };

// Distribution of each feature coordinate.
//   lognormal: exp(mu + sigma Z)      (a = mu, b = sigma)
//   student_t: t with nu dof          (a = nu)
//   gaussian:  N(0, sigma^2)          (a = sigma)
//   laplace:   Laplace(0, scale b)    (a = b)
struct FeatureDistribution {
  FeatureKind kind = FeatureKind::kGaussian;
  double a = 1.0;
  double b = 0.0;

  static FeatureDistribution Lognormal(double mu, double sigma) {
    return {FeatureKind::kLognormal, mu, sigma};
  }
  static FeatureDistribution StudentT(double nu) {
    return {FeatureKind::kStudentT, nu, 0.0};
  }
  static FeatureDistribution Gaussian(double sigma) {
    return {FeatureKind::kGaussian, sigma, 0.0};
  }
  static FeatureDistribution Laplace(double scale) {
    return {FeatureKind::kLaplace, scale, 0.0};
  }

  absl::Status Validate() const;
  std::string ToString() const;
};

enum class NoiseKind {
  kNone,
  kGaussian,
  kLognormal,
  kLogLogistic,
  kLogGamma,
  kLogistic,
};

// Additive noise on the response (or on the logistic margin).
//   gaussian:    N(0, sigma^2)                     (a = sigma)
//   lognormal:   exp(mu + sigma Z)                 (a = mu, b = sigma)
//   loglogistic: density c w^(-c-1) (1 + w^(-c))^(-2) on w > 0   (a = c)
//   loggamma:    log of a Gamma(c, 1) variate, density exp(c w - e^w) / G(c)
//   logistic:    location u, scale s               (a = u, b = s)
struct NoiseDistribution {
  NoiseKind kind = NoiseKind::kNone;
  double a = 0.0;
  double b = 0.0;

  static NoiseDistribution None() { return {NoiseKind::kNone, 0.0, 0.0}; }
  static NoiseDistribution Gaussian(double sigma) {
    return {NoiseKind::kGaussian, sigma, 0.0};
  }
  static NoiseDistribution Lognormal(double mu, double sigma) {
    return {NoiseKind::kLognormal, mu, sigma};
  }
  static NoiseDistribution LogLogistic(double c) {
    return {NoiseKind::kLogLogistic, c, 0.0};
  }
  static NoiseDistribution LogGamma(double c) {
    return {NoiseKind::kLogGamma, c, 0.0};
  }
  static NoiseDistribution Logistic(double u, double s) {
    return {NoiseKind::kLogistic, u, s};
  }

  absl::Status Validate() const;
  std::string ToString() const;
};

// How the single parameter of "gaussian:<p>" and "laplace:<p>" is read.
enum class SpreadParam {
  // gaussian:p has variance p; laplace:p has scale p.
  kVariance,
  // gaussian:p has standard deviation p; laplace:p has standard deviation p.
  kStdDev,
};

// Parses "lognormal:0,0.6", "student_t:10", "gaussian:5", "laplace:5".
absl::StatusOr<FeatureDistribution> ParseFeatureDistribution(
    const std::string& text, SpreadParam spread = SpreadParam::kVariance);

// Parses "none", "gaussian:0.1", "lognormal:0,0.5", "loglogistic:0.1",
// "loggamma:0.5", "logistic:0,0.5".
absl::StatusOr<NoiseDistribution> ParseNoiseDistribution(
    const std::string& text, SpreadParam spread = SpreadParam::kVariance);

double SampleFeature(const FeatureDistribution& dist, RandomStream& rng);
double SampleNoise(const NoiseDistribution& dist, RandomStream& rng);

// Random w* with ||w*||_1 = 1: flat-Dirichlet magnitudes with random signs.
Vector GenWStarL1(int64_t dim, RandomStream& rng);

// s* coordinates at uniformly random positions drawn from N(0, 100^2), the
// rest 0, then projected onto the unit l2 ball.
Vector GenWStarSparse(int64_t dim, int64_t s_star, RandomStream& rng);

// Uniform point of the l1 ball of the given radius.
Vector RandomL1BallPoint(int64_t dim, double radius, RandomStream& rng);

// s-sparse point of the unit l2 ball: uniform support, uniform within the ball
// on that support.
Vector RandomSparseL2BallPoint(int64_t dim, int64_t s, RandomStream& rng);

// y = <w*, x> + noise with i.i.d. feature coordinates.
absl::StatusOr<Dataset> GenLinear(int64_t n, int64_t dim, const Vector& w_star,
                                  const FeatureDistribution& feat,
                                  const NoiseDistribution& noise,
                                  RandomStream& rng);

// y = sign(<w*, x> + noise) in {-1, +1}, with 0 mapped to +1.
absl::StatusOr<Dataset> GenLogistic(int64_t n, int64_t dim,
                                    const Vector& w_star,
                                    const FeatureDistribution& feat,
                                    const NoiseDistribution& noise,
                                    RandomStream& rng);

}  // namespace htdp

#endif  // HTDP_DATAGEN_H_
