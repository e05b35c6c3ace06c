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
#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "htdp/random_stream.h"
#include "oracles.h"

namespace htdp {
namespace {

using ::htdp::testing::SmoothedPhiOracle;

constexpr double kBound = 2 * std::numbers::sqrt2 / 3;

TEST(PhiTest, Examples) {
  EXPECT_EQ(Phi(0), 0);
  EXPECT_DOUBLE_EQ(Phi(1), 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(Phi(2), kBound);
  EXPECT_DOUBLE_EQ(Phi(-2), -kBound);
}

TEST(PhiTest, OddMonotoneBounded) {
  RandomStream rng(1, 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = 6 * (rng.Uniform() - 0.5);
    const double y = x + 0.5 * rng.Uniform();
    EXPECT_EQ(Phi(-x), -Phi(x));
    EXPECT_LE(Phi(x), Phi(y));
    EXPECT_LE(std::abs(Phi(x)), kBound);
  }
}

TEST(PhiTest, ContinuousAtKinks) {
  const double r = std::numbers::sqrt2;
  EXPECT_NEAR(Phi(std::nextafter(r, 0.0)), Phi(std::nextafter(r, 2.0)), 1e-15);
  EXPECT_NEAR(Phi(-std::nextafter(r, 0.0)), Phi(-std::nextafter(r, 2.0)),
              1e-15);
}

TEST(NormalCdfTest, KnownValues) {
  EXPECT_DOUBLE_EQ(NormalCdf(0), 0.5);
  EXPECT_NEAR(NormalCdf(1.959963984540054), 0.975, 1e-15);
  // Lower tail keeps relative accuracy.
  EXPECT_NEAR(NormalCdf(-10) / 7.619853024160527e-24, 1.0, 1e-12);
}

TEST(CorrectionCTest, Limits) {
  EXPECT_EQ(CorrectionC(0, 0), 0);
  EXPECT_EQ(CorrectionC(1.2, 0), 0);
  EXPECT_NEAR(CorrectionC(3, 0), Phi(3) - (3 - 27.0 / 6), 1e-15);
}

TEST(CorrectionCTest, MatchesQuadrature) {
  for (auto [a, b] : {std::pair{0.0, 1.0}, {0.5, 0.3}, {-1.7, 0.8}}) {
    const double expected =
        SmoothedPhiOracle(a, b) - (a * (1 - b * b / 2) - a * a * a / 6);
    EXPECT_NEAR(CorrectionC(a, b), expected, 1e-8) << a << " " << b;
  }
}

TEST(SmoothedPhiExpectationTest, Examples) {
  EXPECT_EQ(SmoothedPhiExpectation(0, 0), 0);
  EXPECT_DOUBLE_EQ(SmoothedPhiExpectation(1, 0), 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(SmoothedPhiExpectation(5, 0), kBound);
  EXPECT_NEAR(SmoothedPhiExpectation(0.5, 0.3), SmoothedPhiOracle(0.5, 0.3),
              1e-8);
}

TEST(SmoothedPhiExpectationTest, MatchesQuadratureOnGrid) {
  for (double a : {-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
    for (double b : {0.01, 0.1, 0.5, 1.0, 2.0}) {
      EXPECT_NEAR(SmoothedPhiExpectation(a, b), SmoothedPhiOracle(a, b), 1e-8)
          << "a=" << a << " b=" << b;
    }
  }
}

TEST(SmoothedPhiExpectationTest, BoundedAndFiniteFarOut) {
  RandomStream rng(2, 0);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::ldexp(rng.Uniform() - 0.5, 1 + i % 12);
    const double b = std::ldexp(rng.Uniform(), i % 10 - 4);
    const double v = SmoothedPhiExpectation(a, b);
    ASSERT_TRUE(std::isfinite(v)) << a << " " << b;
    EXPECT_LE(std::abs(v), kBound + 1e-8);
  }
  // Large |a| leaves the closed-form range and still agrees with quadrature.
  EXPECT_NEAR(SmoothedPhiExpectation(80, 60), SmoothedPhiOracle(80, 60), 1e-8);
  EXPECT_NEAR(SmoothedPhiExpectation(-100, 100), SmoothedPhiOracle(-100, 100),
              1e-8);
}

TEST(RobustMean1DTest, Examples) {
  const std::vector<double> zeros(7, 0.0);
  EXPECT_EQ(*RobustMean1D(zeros, {3.0, 0.5}), 0.0);

  const double scale = 4.0;
  const std::vector<double> one = {scale};
  EXPECT_NEAR(*RobustMean1D(one, {scale, 1e12}) / (scale * 5 / 6), 1.0, 1e-6);

  EXPECT_EQ(RobustMean1D({}, {1, 1}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(RobustMean1D(one, {0, 1}).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(RobustMean1D(one, {1, -1}).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(RobustMean1DTest, OutputBounded) {
  const std::vector<double> huge(10, 1e9);
  EXPECT_LE(*RobustMean1D(huge, {2.0, 1.0}), kBound * 2.0);
}

TEST(RobustMean1DTest, LognormalMean) {
  const int n = 100000;
  const double sigma = 0.6;
  const double second_moment = std::exp(2 * sigma * sigma);
  const CatoniParams params{std::sqrt(n * 1.0 * second_moment), 1.0};
  const double truth = std::exp(sigma * sigma / 2);
  int passes = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    RandomStream rng(seed, 77);
    std::vector<double> x(n);
    for (double& v : x) v = std::exp(sigma * rng.StandardNormal());
    passes += std::abs(*RobustMean1D(x, params) - truth) <= 0.05;
  }
  EXPECT_GE(passes, 18);
}

TEST(RobustMean1DTest, PermutationInvariant) {
  RandomStream rng(3, 0);
  std::vector<double> x(200);
  for (double& v : x) v = std::exp(1.5 * rng.StandardNormal());
  const CatoniParams params{5.0, 2.0};
  const double base = *RobustMean1D(x, params);
  for (int k = 0; k < 20; ++k) {
    for (size_t i = x.size() - 1; i > 0; --i) {
      std::swap(x[i], x[rng.UniformIndex(i + 1)]);
    }
    EXPECT_NEAR(*RobustMean1D(x, params), base, 1e-13 * std::abs(base) + 1e-15);
  }
}

TEST(RobustMean1DTest, SingleReplacementSensitivity) {
  RandomStream rng(4, 0);
  const int n = 30;
  const CatoniParams params{2.5, 0.7};
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> x(n);
    for (double& v : x) v = 10 * rng.StandardNormal() * rng.StandardExponential();
    const double before = *RobustMean1D(x, params);
    x[rng.UniformIndex(n)] = 1e3 * rng.StandardNormal();
    const double after = *RobustMean1D(x, params);
    ASSERT_LE(std::abs(after - before), params.scale / n * 4 *
                                            std::numbers::sqrt2 / 3);
  }
}

TEST(RobustGradientVectorTest, ZeroMatrixAndColumns) {
  EXPECT_EQ(*RobustGradientVector(RowMatrix::Zero(4, 3), {1, 1}),
            Vector::Zero(3));
  EXPECT_EQ(RobustGradientVector(RowMatrix(0, 3), {1, 1}).status().code(),
            absl::StatusCode::kInvalidArgument);

  RandomStream rng(5, 0);
  RowMatrix g(25, 4);
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = 3 * rng.StandardNormal();
  }
  const CatoniParams params{2.0, 1.5};
  const Vector out = *RobustGradientVector(g, params);
  for (int j = 0; j < 4; ++j) {
    std::vector<double> column;
    for (int i = 0; i < 25; ++i) column.push_back(g(i, j));
    EXPECT_NEAR(out[j], *RobustMean1D(column, params), 1e-15);
  }
}

TEST(RobustGradientVectorTest, NeighboringSensitivity) {
  RandomStream rng(6, 0);
  const int m = 50, d = 10;
  const CatoniParams params{1.7, 1.0};
  const double bound = RobustGradientSensitivity(params.scale, m);
  EXPECT_NEAR(bound, 4 * std::numbers::sqrt2 * params.scale / (3 * m), 1e-15);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    RowMatrix g(m, d);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < d; ++j) g(i, j) = rng.StandardNormal();
    }
    const Vector before = *RobustGradientVector(g, params);
    const int64_t row = rng.UniformIndex(m);
    for (int j = 0; j < d; ++j) g(row, j) = 50 * rng.StandardNormal();
    const Vector after = *RobustGradientVector(g, params);
    worst = std::max(worst, (after - before).cwiseAbs().maxCoeff());
  }
  EXPECT_LE(worst, bound + 1e-9);
}

}  // namespace
}  // namespace htdp
