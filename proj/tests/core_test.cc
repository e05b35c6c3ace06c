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


#include <cmath>
#include <cstring>
#include <set>

#include "gtest/gtest.h"
#include "htdp/dataset.h"
#include "htdp/domain.h"
#include "htdp/privacy_budget.h"
#include "htdp/random_stream.h"

namespace htdp {
namespace {

Dataset Iota(int64_t n, int64_t d) {
  RowMatrix x(n, d);
  Vector y(n);
  for (int64_t i = 0; i < n; ++i) {
    for (int64_t j = 0; j < d; ++j) x(i, j) = 100.0 * i + j;
    y[i] = -static_cast<double>(i);
  }
  return *Dataset::Create(std::move(x), std::move(y));
}

TEST(DatasetTest, RejectsBadShapesAndValues) {
  EXPECT_FALSE(Dataset::Create(RowMatrix(0, 3), Vector(0)).ok());
  EXPECT_FALSE(Dataset::Create(RowMatrix(2, 0), Vector(2)).ok());
  EXPECT_FALSE(Dataset::Create(RowMatrix::Zero(2, 3), Vector::Zero(3)).ok());
  RowMatrix x = RowMatrix::Zero(2, 2);
  x(1, 1) = std::nan("");
  EXPECT_FALSE(Dataset::Create(x, Vector::Zero(2)).ok());
  Vector y = Vector::Zero(2);
  y[0] = INFINITY;
  EXPECT_FALSE(Dataset::Create(RowMatrix::Zero(2, 2), y).ok());
}

TEST(SplitDatasetTest, ExactDivision) {
  const Dataset data = Iota(10, 2);
  const auto parts = SplitDataset(data, 2);
  ASSERT_TRUE(parts.ok());
  ASSERT_EQ(parts->size(), 2u);
  EXPECT_EQ((*parts)[0].num_rows(), 5);
  EXPECT_EQ((*parts)[0].response(0), 0.0);
  EXPECT_EQ((*parts)[0].response(4), -4.0);
  EXPECT_EQ((*parts)[1].response(0), -5.0);
  EXPECT_EQ((*parts)[1].response(4), -9.0);
}

TEST(SplitDatasetTest, RemainderDiscarded) {
  const Dataset data = Iota(10, 2);
  const auto parts = SplitDataset(data, 3);
  ASSERT_TRUE(parts.ok());
  ASSERT_EQ(parts->size(), 3u);
  for (const Dataset& p : *parts) EXPECT_EQ(p.num_rows(), 3);
  EXPECT_EQ((*parts)[2].response(2), -8.0);
}

TEST(SplitDatasetTest, SinglePartIsIdentity) {
  const Dataset data = Iota(10, 3);
  const auto parts = SplitDataset(data, 1);
  ASSERT_TRUE(parts.ok());
  EXPECT_EQ((*parts)[0].features(), data.features());
  EXPECT_EQ((*parts)[0].responses(), data.responses());
}

TEST(SplitDatasetTest, InvalidPartCounts) {
  const Dataset data = Iota(10, 2);
  EXPECT_EQ(SplitDataset(data, 11).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(SplitDataset(data, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(SplitDataset(data, -2).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(SplitDatasetTest, PartsAreDisjointAndFromSource) {
  const Dataset data = Iota(37, 4);
  const auto parts = SplitDataset(data, 5);
  ASSERT_TRUE(parts.ok());
  std::set<double> seen;
  for (const Dataset& p : *parts) {
    EXPECT_EQ(p.storage_id(), data.storage_id());
    for (int64_t i = 0; i < p.num_rows(); ++i) {
      const double key = p.row(i)[0];
      EXPECT_TRUE(seen.insert(key).second) << "row repeated";
      const int64_t source = static_cast<int64_t>(key / 100.0);
      EXPECT_EQ(p.row(i), data.row(source));
      EXPECT_EQ(p.response(i), data.response(source));
    }
  }
  EXPECT_EQ(seen.size(), 35u);
}

TEST(ProjectL2BallTest, Examples) {
  Vector v(2);
  v << 0.3, 0.4;
  EXPECT_EQ(ProjectL2Ball(v, 1.0), v);
  v << 3, 4;
  const Vector p = ProjectL2Ball(v, 1.0);
  EXPECT_NEAR(p[0], 0.6, 1e-15);
  EXPECT_NEAR(p[1], 0.8, 1e-15);
  EXPECT_EQ(ProjectL2Ball(Vector::Zero(2), 1.0), Vector::Zero(2));
}

TEST(ProjectL2BallTest, IdempotentNonExpansiveAndBounded) {
  RandomStream rng(7, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    Vector u(5), v(5);
    const double spread = 0.1 + 5.0 * rng.Uniform();
    for (int j = 0; j < 5; ++j) {
      u[j] = spread * rng.StandardNormal();
      v[j] = spread * rng.StandardNormal();
    }
    const Vector pu = ProjectL2Ball(u, 1.0);
    const Vector pv = ProjectL2Ball(v, 1.0);
    EXPECT_LE((pu - pv).norm(), (u - v).norm() + 1e-10);
    EXPECT_LE(pu.norm(), 1.0 + 1e-12);
    EXPECT_LE((ProjectL2Ball(pu, 1.0) - pu).norm(), 1e-15);
  }
}

TEST(ShrinkTest, Scalar) {
  EXPECT_EQ(ShrinkScalar(5, 2), 2);
  EXPECT_EQ(ShrinkScalar(-3, 2), -2);
  EXPECT_EQ(ShrinkScalar(0.7, 2), 0.7);
  for (double x : {-4.0, -1.0, 0.0, 1.5, 9.0}) {
    EXPECT_EQ(ShrinkScalar(ShrinkScalar(x, 2), 2), ShrinkScalar(x, 2));
  }
}

TEST(ShrinkTest, Dataset) {
  RowMatrix x(2, 2);
  x << 0.5, -0.25, 0.1, 0.9;
  Vector y(2);
  y << 0.3, -0.6;
  const Dataset small = *Dataset::Create(x, y);
  const Dataset same = ShrinkDataset(small, 1.0);
  EXPECT_EQ(same.features(), small.features());
  EXPECT_EQ(same.responses(), small.responses());

  x(1, 0) = 10;
  const Dataset big = *Dataset::Create(x, y);
  const Dataset once = ShrinkDataset(big, 1.0);
  RowMatrix expected = x;
  expected(1, 0) = 1;
  EXPECT_EQ(once.features(), expected);
  EXPECT_EQ(once.responses(), y);

  const Dataset twice = ShrinkDataset(once, 1.0);
  EXPECT_EQ(twice.features(), once.features());
  EXPECT_EQ(twice.responses(), once.responses());
}

TEST(ShrinkTest, EntriesBounded) {
  RandomStream rng(3, 1);
  RowMatrix x(50, 8);
  Vector y(50);
  for (int i = 0; i < 50; ++i) {
    y[i] = 10 * rng.StandardNormal();
    for (int j = 0; j < 8; ++j) x(i, j) = 10 * rng.StandardNormal();
  }
  const Dataset out = ShrinkDataset(*Dataset::Create(x, y), 2.5);
  EXPECT_LE(out.features().cwiseAbs().maxCoeff(), 2.5);
  EXPECT_LE(out.responses().cwiseAbs().maxCoeff(), 2.5);
  EXPECT_EQ(out.dim(), 8);
  EXPECT_EQ(out.num_rows(), 50);
}

TEST(RandomStreamTest, SameIdentityReproduces) {
  RandomStream a(42, 9), b(42, 9);
  for (int i = 0; i < 10000; ++i) {
    const double x = a.Uniform();
    const double y = b.Uniform();
    ASSERT_EQ(std::memcmp(&x, &y, sizeof x), 0) << "draw " << i;
  }
}

TEST(RandomStreamTest, DistinctStreamsDiffer) {
  RandomStream a(42, 9), b(42, 10), c(43, 9);
  int same_ab = 0, same_ac = 0;
  double corr = 0;
  for (int i = 0; i < 10000; ++i) {
    const uint64_t x = a.NextBits(), y = b.NextBits(), z = c.NextBits();
    same_ab += x == y;
    same_ac += x == z;
  }
  EXPECT_EQ(same_ab, 0);
  EXPECT_EQ(same_ac, 0);
  RandomStream p(1, 1), q(1, 2);
  for (int i = 0; i < 100000; ++i) {
    corr += (p.Uniform() - 0.5) * (q.Uniform() - 0.5);
  }
  // Var of each product is 1/144; 5 sigma bound on the mean.
  EXPECT_LT(std::abs(corr / 100000), 5.0 / 12.0 / std::sqrt(100000.0));
}

TEST(RandomStreamTest, DeriveDoesNotAdvance) {
  RandomStream a(5, 5), b(5, 5);
  RandomStream child1 = a.Derive(3);
  RandomStream child2 = a.Derive(3);
  EXPECT_EQ(a.NextBits(), b.NextBits());
  EXPECT_EQ(child1.NextBits(), child2.NextBits());
  EXPECT_NE(a.Derive(3).stream_id(), a.Derive(4).stream_id());
}

TEST(RandomStreamTest, UniformIsOpen) {
  RandomStream rng(11, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.Uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomStreamTest, UniformIndexInRange) {
  RandomStream rng(11, 1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.UniformIndex(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(PolytopeDomainTest, L1BallVerticesAndDiameter) {
  const auto ball = PolytopeDomain::L1Ball(3, 2.0);
  ASSERT_TRUE(ball.ok());
  EXPECT_EQ(ball->num_vertices(), 6);
  EXPECT_DOUBLE_EQ(ball->l1_diameter(), 4.0);
  EXPECT_NEAR(ball->RecomputeL1Diameter(), ball->l1_diameter(), 1e-9 * 4.0);
  Vector expected = Vector::Zero(3);
  expected[1] = -2.0;
  EXPECT_EQ(ball->Vertex(4), expected);
}

TEST(PolytopeDomainTest, ExplicitVertices) {
  std::vector<Vector> vertices(3, Vector::Zero(2));
  vertices[0] << 0, 0;
  vertices[1] << 1, 0;
  vertices[2] << 0, 3;
  const auto domain = PolytopeDomain::FromVertices(vertices);
  ASSERT_TRUE(domain.ok());
  EXPECT_DOUBLE_EQ(domain->l1_diameter(), 4.0);
  EXPECT_FALSE(PolytopeDomain::FromVertices({}).ok());
}

TEST(PolytopeDomainTest, ScoresMatchExplicitInnerProducts) {
  const auto ball = PolytopeDomain::L1Ball(4, 1.5);
  Vector g(4);
  g << 0.3, -1.0, 2.0, 0.0;
  const std::vector<double> scores = ball->LinearScores(g);
  for (int64_t i = 0; i < ball->num_vertices(); ++i) {
    EXPECT_DOUBLE_EQ(scores[i], -ball->Vertex(i).dot(g));
  }
}

TEST(PolytopeDomainTest, MoveTowardIsConvexCombination) {
  const auto ball = PolytopeDomain::L1Ball(3, 1.0);
  Vector w(3);
  w << 0.2, -0.3, 0.1;
  Vector expected = 0.25 * w + 0.75 * ball->Vertex(5);
  ball->MoveToward(w, 5, 0.75);
  EXPECT_TRUE(w.isApprox(expected, 1e-15));
  EXPECT_TRUE(ball->CheckMember(w).ok());
  Vector outside = Vector::Constant(3, 0.5);
  EXPECT_FALSE(ball->CheckMember(outside).ok());
}

TEST(SparsityDomainTest, Validate) {
  EXPECT_TRUE((SparsityDomain{2, 4, 1.0}).Validate(10).ok());
  EXPECT_FALSE((SparsityDomain{4, 2, 1.0}).Validate(10).ok());
  EXPECT_FALSE((SparsityDomain{2, 11, 1.0}).Validate(10).ok());
  EXPECT_FALSE((SparsityDomain{0, 1, 1.0}).Validate(10).ok());
}

TEST(PrivacyBudgetTest, Create) {
  EXPECT_TRUE(PrivacyBudget::Create(1.0, 0.0).ok());
  EXPECT_FALSE(PrivacyBudget::Create(0.0, 0.1).ok());
  EXPECT_FALSE(PrivacyBudget::Create(1.0, 1.0).ok());
  EXPECT_FALSE(PrivacyBudget::Create(1.0, -0.1).ok());
}

TEST(BudgetAccountantTest, ZeroChargeLeavesStateUnchanged) {
  BudgetAccountant acc(*PrivacyBudget::Create(1.0, 1e-5));
  ASSERT_TRUE(acc.Charge(0, 0).ok());
  EXPECT_EQ(acc.budget().spent_epsilon, 0);
  EXPECT_EQ(acc.budget().spent_delta, 0);
}

TEST(BudgetAccountantTest, SequentialOverspendFails) {
  BudgetAccountant acc(*PrivacyBudget::Create(1.0, 0.0));
  ASSERT_TRUE(acc.Charge(0.6, 0).ok());
  const absl::Status s = acc.Charge(0.6, 0);
  EXPECT_EQ(s.code(), absl::StatusCode::kResourceExhausted);
  EXPECT_DOUBLE_EQ(acc.budget().spent_epsilon, 0.6);
  EXPECT_EQ(acc.Charge(0.1, 1e-9).code(), absl::StatusCode::kResourceExhausted);
}

TEST(BudgetAccountantTest, DisjointPartsChargeOnce) {
  BudgetAccountant acc(*PrivacyBudget::Create(0.8, 0.0));
  ASSERT_TRUE(acc.ChargeDisjointParts(0.8, 0.0, 25).ok());
  EXPECT_EQ(acc.budget().spent_epsilon, 0.8);
  EXPECT_EQ(acc.entries().size(), 1u);
  EXPECT_EQ(acc.entries()[0].mechanisms, 25);
}

TEST(BudgetAccountantTest, AdvancedCompositionChargesTarget) {
  const double eps = 0.9, delta = 1e-6;
  const int64_t steps = 40;
  BudgetAccountant acc(*PrivacyBudget::Create(eps, delta));
  const double step =
      eps / (2.0 * std::sqrt(2.0 * steps * std::log(1.0 / delta)));
  ASSERT_TRUE(acc.ChargeAdvancedComposition(eps, delta, {step, 0.0}, steps, 1.0)
                  .ok());
  EXPECT_EQ(acc.budget().spent_epsilon, eps);
  EXPECT_EQ(acc.budget().spent_delta, delta);
  const StepBudget total = RecomposeAdvanced({step, 0.0}, steps, delta, 1.0);
  EXPECT_NEAR(total.epsilon, eps, 1e-15);
  EXPECT_EQ(total.delta, delta);
}

TEST(BudgetAccountantTest, AdvancedCompositionRejectsTooLargeSteps) {
  BudgetAccountant acc(*PrivacyBudget::Create(0.5, 1e-6));
  const absl::Status s =
      acc.ChargeAdvancedComposition(0.5, 1e-6, {0.1, 0.0}, 100, 2.0);
  EXPECT_EQ(s.code(), absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(acc.budget().spent_epsilon, 0);
}

TEST(BudgetAccountantTest, NonPrivateReportsInfinity) {
  BudgetAccountant acc(*PrivacyBudget::Create(1.0, 0.0));
  EXPECT_EQ(acc.reported_epsilon(), 0.0);
  acc.MarkNonPrivate();
  EXPECT_TRUE(std::isinf(acc.reported_epsilon()));
}

}  // namespace
}  // namespace htdp
