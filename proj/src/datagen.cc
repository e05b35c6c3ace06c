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


#include "htdp/datagen.h"

#include <cmath>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

absl::StatusOr<std::vector<double>> ParseParams(const std::string& text,
                                                std::string& name) {
  const std::vector<std::string> head = absl::StrSplit(text, absl::MaxSplits(':', 1));
  name = head[0];
  std::vector<double> params;
  if (head.size() < 2) return params;
  for (absl::string_view piece : absl::StrSplit(head[1], ',')) {
    double value;
    if (!absl::SimpleAtod(piece, &value)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("bad number '%s' in '%s'", piece, text));
    }
    params.push_back(value);
  }
  return params;
}

absl::Status ExpectParams(const std::string& text,
                          const std::vector<double>& params, size_t count) {
  if (params.size() != count) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "'%s' needs %d parameter(s), got %d", text, count, params.size()));
  }
  return absl::OkStatus();
}

double GaussianSigma(double p, SpreadParam spread) {
  return spread == SpreadParam::kVariance ? std::sqrt(p) : p;
}

double LaplaceScale(double p, SpreadParam spread) {
  return spread == SpreadParam::kVariance ? p : p / std::sqrt(2.0);
}

double LaplaceDraw(double scale, RandomStream& rng) {
  const double u = rng.Uniform() - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? -magnitude : magnitude;
}

double StudentTDraw(double nu, RandomStream& rng) {
  const double z = rng.StandardNormal();
  const double chi2 = 2.0 * rng.Gamma(0.5 * nu);
  return z / std::sqrt(chi2 / nu);
}

// log(U / (1 - U)) for U uniform on (0, 1): a standard logistic variate.
double Logit(RandomStream& rng) {
  const double u = rng.Uniform();
  return std::log(u) - std::log1p(-u);
}

absl::Status CheckGeneratorInputs(int64_t n, int64_t dim, const Vector& w_star,
                                  const FeatureDistribution& feat,
                                  const NoiseDistribution& noise) {
  if (n < 1 || dim < 1) {
    return absl::InvalidArgumentError("n and d must be >= 1");
  }
  if (w_star.size() != dim) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "w* has dimension %d, expected %d", w_star.size(), dim));
  }
  RETURN_IF_ERROR(feat.Validate());
  return noise.Validate();
}

RowMatrix SampleFeatures(int64_t n, int64_t dim,
                         const FeatureDistribution& feat, RandomStream& rng) {
  RowMatrix x(n, dim);
  double* data = x.data();
  for (int64_t i = 0; i < n * dim; ++i) data[i] = SampleFeature(feat, rng);
  return x;
}

}  // namespace

absl::Status FeatureDistribution::Validate() const {
  bool ok = true;
  switch (kind) {
    case FeatureKind::kLognormal:
      ok = std::isfinite(a) && b > 0 && std::isfinite(b);
      break;
    case FeatureKind::kStudentT:
    case FeatureKind::kGaussian:
    case FeatureKind::kLaplace:
      ok = a > 0 && std::isfinite(a);
      break;
  }
  if (!ok) {
    return absl::InvalidArgumentError("invalid feature distribution " +
                                      ToString());
  }
  return absl::OkStatus();
}

std::string FeatureDistribution::ToString() const {
  switch (kind) {
    case FeatureKind::kLognormal:
      return absl::StrFormat("lognormal(mu=%g, sigma=%g)", a, b);
    case FeatureKind::kStudentT:
      return absl::StrFormat("student_t(nu=%g)", a);
    case FeatureKind::kGaussian:
      return absl::StrFormat("gaussian(sigma=%g)", a);
    case FeatureKind::kLaplace:
      return absl::StrFormat("laplace(scale=%g)", a);
  }
  return "unknown";
}

absl::Status NoiseDistribution::Validate() const {
  bool ok = true;
  switch (kind) {
    case NoiseKind::kNone:
      break;
    case NoiseKind::kLognormal:
    case NoiseKind::kLogistic:
      ok = std::isfinite(a) && b > 0 && std::isfinite(b);
      break;
    case NoiseKind::kGaussian:
    case NoiseKind::kLogLogistic:
    case NoiseKind::kLogGamma:
      ok = a > 0 && std::isfinite(a);
      break;
  }
  if (!ok) {
    return absl::InvalidArgumentError("invalid noise distribution " +
                                      ToString());
  }
  return absl::OkStatus();
}

std::string NoiseDistribution::ToString() const {
  switch (kind) {
    case NoiseKind::kNone:
      return "none";
    case NoiseKind::kGaussian:
      return absl::StrFormat("gaussian(sigma=%g)", a);
    case NoiseKind::kLognormal:
      return absl::StrFormat("lognormal(mu=%g, sigma=%g)", a, b);
    case NoiseKind::kLogLogistic:
      return absl::StrFormat("loglogistic(c=%g)", a);
    case NoiseKind::kLogGamma:
      return absl::StrFormat("loggamma(c=%g)", a);
    case NoiseKind::kLogistic:
      return absl::StrFormat("logistic(u=%g, s=%g)", a, b);
  }
  return "unknown";
}

absl::StatusOr<FeatureDistribution> ParseFeatureDistribution(
    const std::string& text, SpreadParam spread) {
  std::string name;
  ASSIGN_OR_RETURN(const std::vector<double> p, ParseParams(text, name));
  FeatureDistribution dist;
  if (name == "lognormal") {
    RETURN_IF_ERROR(ExpectParams(text, p, 2));
    dist = FeatureDistribution::Lognormal(p[0], p[1]);
  } else if (name == "student_t") {
    RETURN_IF_ERROR(ExpectParams(text, p, 1));
    dist = FeatureDistribution::StudentT(p[0]);
  } else if (name == "gaussian") {
    RETURN_IF_ERROR(ExpectParams(text, p, 1));
    if (!(p[0] > 0)) return absl::InvalidArgumentError("'" + text + "': need > 0");
    dist = FeatureDistribution::Gaussian(GaussianSigma(p[0], spread));
  } else if (name == "laplace") {
    RETURN_IF_ERROR(ExpectParams(text, p, 1));
    dist = FeatureDistribution::Laplace(LaplaceScale(p[0], spread));
  } else {
    return absl::InvalidArgumentError(absl::StrFormat(
        "unknown feature distribution '%s' "
        "(lognormal:mu,sigma | student_t:nu | gaussian:p | laplace:p)",
        text));
  }
  RETURN_IF_ERROR(dist.Validate());
  return dist;
}

absl::StatusOr<NoiseDistribution> ParseNoiseDistribution(
    const std::string& text, SpreadParam spread) {
  std::string name;
  ASSIGN_OR_RETURN(const std::vector<double> p, ParseParams(text, name));
  NoiseDistribution dist;
  if (name == "none") {
    RETURN_IF_ERROR(ExpectParams(text, p, 0));
    dist = NoiseDistribution::None();
  } else if (name == "gaussian") {
    RETURN_IF_ERROR(ExpectParams(text, p, 1));
    if (!(p[0] > 0)) return absl::InvalidArgumentError("'" + text + "': need > 0");
    dist = NoiseDistribution::Gaussian(GaussianSigma(p[0], spread));
  } else if (name == "lognormal") {
    RETURN_IF_ERROR(ExpectParams(text, p, 2));
    dist = NoiseDistribution::Lognormal(p[0], p[1]);
  } else if (name == "loglogistic") {
    RETURN_IF_ERROR(ExpectParams(text, p, 1));
    dist = NoiseDistribution::LogLogistic(p[0]);
  } else if (name == "loggamma") {
    RETURN_IF_ERROR(ExpectParams(text, p, 1));
    dist = NoiseDistribution::LogGamma(p[0]);
  } else if (name == "logistic") {
    RETURN_IF_ERROR(ExpectParams(text, p, 2));
    dist = NoiseDistribution::Logistic(p[0], p[1]);
  } else {
    return absl::InvalidArgumentError(absl::StrFormat(
        "unknown noise distribution '%s' (none | gaussian:p | "
        "lognormal:mu,sigma | loglogistic:c | loggamma:c | logistic:u,s)",
        text));
  }
  RETURN_IF_ERROR(dist.Validate());
  return dist;
}

double SampleFeature(const FeatureDistribution& dist, RandomStream& rng) {
  switch (dist.kind) {
    case FeatureKind::kLognormal:
      return std::exp(dist.a + dist.b * rng.StandardNormal());
    case FeatureKind::kStudentT:
      return StudentTDraw(dist.a, rng);
    case FeatureKind::kGaussian:
      return dist.a * rng.StandardNormal();
    case FeatureKind::kLaplace:
      return LaplaceDraw(dist.a, rng);
  }
  return 0.0;
}

double SampleNoise(const NoiseDistribution& dist, RandomStream& rng) {
  switch (dist.kind) {
    case NoiseKind::kNone:
      return 0.0;
    case NoiseKind::kGaussian:
      return dist.a * rng.StandardNormal();
    case NoiseKind::kLognormal:
      return std::exp(dist.a + dist.b * rng.StandardNormal());
    case NoiseKind::kLogLogistic:
      // Inverse CDF F(w) = 1 / (1 + w^-c): w = (U / (1 - U))^(1/c).
      return std::exp(Logit(rng) / dist.a);
    case NoiseKind::kLogGamma:
      return rng.LogGamma(dist.a);
    case NoiseKind::kLogistic:
      return dist.a + dist.b * Logit(rng);
  }
  return 0.0;
}

Vector GenWStarL1(int64_t dim, RandomStream& rng) {
  Vector w(dim);
  for (int64_t j = 0; j < dim; ++j) w[j] = rng.StandardExponential();
  w /= w.sum();
  for (int64_t j = 0; j < dim; ++j) w[j] *= rng.RandomSign();
  return w;
}

Vector GenWStarSparse(int64_t dim, int64_t s_star, RandomStream& rng) {
  std::vector<int64_t> index(dim);
  for (int64_t j = 0; j < dim; ++j) index[j] = j;
  Vector w = Vector::Zero(dim);
  // Partial Fisher-Yates: the first s* entries form a uniform random subset.
  for (int64_t i = 0; i < s_star; ++i) {
    const int64_t k = i + static_cast<int64_t>(rng.UniformIndex(dim - i));
    std::swap(index[i], index[k]);
    w[index[i]] = 100.0 * rng.StandardNormal();
  }
  return ProjectL2Ball(w, 1.0);
}

Vector RandomL1BallPoint(int64_t dim, double radius, RandomStream& rng) {
  // The first d coordinates of a flat Dirichlet over d + 1 cells are uniform
  // on the solid simplex; random signs spread it over the ball.
  Vector e(dim + 1);
  for (int64_t j = 0; j <= dim; ++j) e[j] = rng.StandardExponential();
  const double total = e.sum();
  Vector w(dim);
  for (int64_t j = 0; j < dim; ++j) {
    w[j] = radius * (e[j] / total) * rng.RandomSign();
  }
  return w;
}

Vector RandomSparseL2BallPoint(int64_t dim, int64_t s, RandomStream& rng) {
  std::vector<int64_t> index(dim);
  for (int64_t j = 0; j < dim; ++j) index[j] = j;
  Vector direction = Vector::Zero(dim);
  for (int64_t i = 0; i < s; ++i) {
    const int64_t k = i + static_cast<int64_t>(rng.UniformIndex(dim - i));
    std::swap(index[i], index[k]);
    direction[index[i]] = rng.StandardNormal();
  }
  const double norm = direction.norm();
  if (norm == 0.0) return direction;
  const double radius = std::pow(rng.Uniform(), 1.0 / static_cast<double>(s));
  return direction * (radius / norm);
}

absl::StatusOr<Dataset> GenLinear(int64_t n, int64_t dim, const Vector& w_star,
                                  const FeatureDistribution& feat,
                                  const NoiseDistribution& noise,
                                  RandomStream& rng) {
  RETURN_IF_ERROR(CheckGeneratorInputs(n, dim, w_star, feat, noise));
  RowMatrix x = SampleFeatures(n, dim, feat, rng);
  Vector y = x * w_star;
  for (int64_t i = 0; i < n; ++i) y[i] += SampleNoise(noise, rng);
  return Dataset::Create(std::move(x), std::move(y));
}

absl::StatusOr<Dataset> GenLogistic(int64_t n, int64_t dim,
                                    const Vector& w_star,
                                    const FeatureDistribution& feat,
                                    const NoiseDistribution& noise,
                                    RandomStream& rng) {
  RETURN_IF_ERROR(CheckGeneratorInputs(n, dim, w_star, feat, noise));
  RowMatrix x = SampleFeatures(n, dim, feat, rng);
  Vector y = x * w_star;
  for (int64_t i = 0; i < n; ++i) {
    // sign(sigmoid(z) - 1/2) = sign(z).
    y[i] = (y[i] + SampleNoise(noise, rng)) >= 0.0 ? 1.0 : -1.0;
  }
  return Dataset::Create(std::move(x), std::move(y));
}

}  // namespace htdp
