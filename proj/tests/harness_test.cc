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


#include "htdp/harness.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "htdp/csv.h"
#include "htdp/random_stream.h"

namespace htdp {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> Lines(const std::string& text) {
  return absl::StrSplit(text, '\n', absl::SkipEmpty());
}

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/" + name;
}

ExperimentConfig SmallFw() {
  ExperimentConfig cfg;
  cfg.algorithm = Algorithm::kFrankWolfe;
  cfg.features = FeatureDistribution::Lognormal(0, 0.6);
  cfg.noise = NoiseDistribution::Gaussian(std::sqrt(0.1));
  cfg.n_grid = {500, 1000};
  cfg.d_grid = {10};
  cfg.eps_grid = {1.0};
  cfg.trials = 3;
  cfg.seed = 7;
  return cfg;
}

TEST(ComputeExcessRiskTest, Examples) {
  RandomStream rng(1, 0);
  const int n = 200, d = 4;
  RowMatrix x(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) x(i, j) = rng.StandardNormal();
  }
  Vector w_star(d);
  w_star << 0.1, -0.2, 0.3, 0.05;
  const Dataset data = *Dataset::Create(x, x * w_star);
  EXPECT_EQ(*ComputeExcessRisk(LossModel::Squared(), data, w_star, w_star), 0.0);

  Vector w = w_star;
  w[0] += 0.1;
  const double expected = (0.1 * x.col(0)).squaredNorm() / n;
  EXPECT_NEAR(*ComputeExcessRisk(LossModel::Squared(), data, w, w_star),
              expected, 1e-14);

  for (int k = 0; k < 50; ++k) {
    Vector other(d);
    for (int j = 0; j < d; ++j) other[j] = rng.StandardNormal();
    EXPECT_GE(*ComputeExcessRisk(LossModel::Squared(), data, other, w_star),
              -1e-9);
  }
  EXPECT_FALSE(
      ComputeExcessRisk(LossModel::Squared(), data, Vector::Zero(3), w_star)
          .ok());
}

TEST(DeltaRuleTest, ParseAndEvaluate) {
  const DeltaRule power = *DeltaRule::Parse("n^-1.1");
  EXPECT_DOUBLE_EQ(power.Delta(10000), std::pow(10000.0, -1.1));
  const DeltaRule fixed = *DeltaRule::Parse("fixed:1e-5");
  EXPECT_EQ(fixed.Delta(123), 1e-5);
  EXPECT_EQ(DeltaRule::Parse(power.ToString())->ToString(), power.ToString());
  EXPECT_FALSE(DeltaRule::Parse("fixed:2").ok());
  EXPECT_FALSE(DeltaRule::Parse("n^1.1").ok());
  EXPECT_FALSE(DeltaRule::Parse("sqrt").ok());
}

TEST(ExperimentConfigTest, Validate) {
  ExperimentConfig cfg = SmallFw();
  EXPECT_TRUE(cfg.Validate().ok());
  cfg.trials = 0;
  EXPECT_FALSE(cfg.Validate().ok());
  cfg = SmallFw();
  cfg.n_grid.clear();
  EXPECT_FALSE(cfg.Validate().ok());
  cfg = SmallFw();
  cfg.algorithm = Algorithm::kLasso;
  cfg.loss = LossModel::LogisticL2(0.1);
  EXPECT_FALSE(cfg.Validate().ok());
  cfg = SmallFw();
  cfg.loss = LossModel::MeanEstimation();
  EXPECT_FALSE(cfg.Validate().ok());
  for (Algorithm a : {Algorithm::kFrankWolfe, Algorithm::kLasso,
                      Algorithm::kSparseLinear, Algorithm::kSparseOpt}) {
    EXPECT_EQ(*ParseAlgorithm(AlgorithmName(a)), a);
  }
}

TEST(RunExperimentTest, SingleTrialSingleRecord) {
  ExperimentConfig cfg = SmallFw();
  cfg.n_grid = {500};
  cfg.trials = 1;
  const auto result = RunExperiment(cfg);
  ASSERT_TRUE(result.ok()) << result.status();
  ASSERT_EQ(result->records.size(), 1u);
  const TrialRecord& r = result->records[0];
  EXPECT_FALSE(r.failed) << r.error;
  EXPECT_TRUE(std::isfinite(r.excess_risk));
  EXPECT_EQ(static_cast<int64_t>(r.series.size()), r.iterations);
  EXPECT_EQ(r.series.back(), r.excess_risk);
  EXPECT_EQ(r.spent_epsilon, r.declared_epsilon);
  EXPECT_EQ(r.spent_delta, r.declared_delta);

  const std::string path = TempPath("one.csv");
  ASSERT_TRUE(WriteResultsCsv(*result, path).ok());
  const auto lines = Lines(ReadFile(path));
  ASSERT_EQ(lines.size(), 3u);  // header, trial row, aggregate row
  EXPECT_EQ(lines[0], "algorithm,n,d,epsilon,s_star,trial,excess_risk,wall_ms,failed");
}

TEST(RunExperimentTest, SameSeedSameBytes) {
  const ExperimentConfig cfg = SmallFw();
  std::string texts[2];
  for (int k = 0; k < 2; ++k) {
    const auto result = RunExperiment(cfg);
    ASSERT_TRUE(result.ok());
    const std::string path = TempPath("det" + std::to_string(k) + ".csv");
    ASSERT_TRUE(WriteResultsCsv(*result, path, /*wall_time=*/false).ok());
    texts[k] = ReadFile(path);
  }
  EXPECT_FALSE(texts[0].empty());
  EXPECT_EQ(texts[0], texts[1]);

  ExperimentConfig other = cfg;
  other.seed = 8;
  const auto different = RunExperiment(other);
  const std::string path = TempPath("det_other.csv");
  ASSERT_TRUE(WriteResultsCsv(*different, path, false).ok());
  EXPECT_NE(ReadFile(path), texts[0]);
}

TEST(RunExperimentTest, CsvRoundTripAndAggregates) {
  const auto result = RunExperiment(SmallFw());
  ASSERT_TRUE(result.ok());
  const std::string path = TempPath("round.csv");
  ASSERT_TRUE(WriteResultsCsv(*result, path).ok());
  const auto lines = Lines(ReadFile(path));
  ASSERT_EQ(lines.size(), 1 + result->records.size() + result->summaries.size());
  size_t row = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> cells = absl::StrSplit(lines[i], ',');
    ASSERT_EQ(cells.size(), 9u);
    double value;
    ASSERT_TRUE(absl::SimpleAtod(cells[6], &value));
    if (cells[5] == "AGG") continue;
    const double truth = result->records[row++].excess_risk;
    EXPECT_LE(std::abs(value - truth), 5e-10 * std::abs(truth));
  }
  EXPECT_EQ(row, result->records.size());

  for (const GridPointSummary& s : result->summaries) {
    double sum = 0;
    int count = 0;
    for (const TrialRecord& r : result->records) {
      if (r.n == s.n && r.d == s.d && r.epsilon == s.epsilon && !r.failed) {
        sum += r.excess_risk;
        ++count;
      }
    }
    ASSERT_EQ(count, s.completed);
    EXPECT_NEAR(s.mean_excess_risk, sum / count,
                1e-12 * std::abs(sum / count));
  }
}

TEST(WriteResultsCsvTest, EmptyIsHeaderOnly) {
  const std::string path = TempPath("empty.csv");
  ASSERT_TRUE(WriteResultsCsv(ExperimentResult{}, path).ok());
  EXPECT_EQ(ReadFile(path),
            "algorithm,n,d,epsilon,s_star,trial,excess_risk,wall_ms,failed\n");
  EXPECT_FALSE(WriteResultsCsv(ExperimentResult{}, "/nonexistent/dir/x.csv").ok());
}

TEST(EmitPlotSeriesTest, BlocksPerSeries) {
  ExperimentConfig cfg = SmallFw();
  cfg.n_grid = {600};
  cfg.d_grid = {5, 8};
  cfg.eps_grid = {0.5, 1.0};
  cfg.trials = 2;
  const auto result = RunExperiment(cfg);
  ASSERT_TRUE(result.ok());
  const std::string path = TempPath("plot.txt");
  ASSERT_TRUE(EmitPlotSeries(*result, path).ok());
  const std::string text = ReadFile(path);
  const std::vector<std::string> blocks = absl::StrSplit(text, "\n\n");
  ASSERT_EQ(blocks.size(), 2u);
  for (const std::string& block : blocks) {
    const auto lines = Lines(block);
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0].rfind("# series fw d=", 0), 0u) << lines[0];
    EXPECT_EQ(lines[1], "# epsilon mean_excess_risk");
  }
  // y values equal the aggregate means.
  const auto first = Lines(blocks[0]);
  const std::vector<std::string> xy = absl::StrSplit(first[2], ' ');
  double y;
  ASSERT_TRUE(absl::SimpleAtod(xy[1], &y));
  EXPECT_LE(std::abs(y - result->summaries[0].mean_excess_risk),
            5e-10 * std::abs(y));

  ExperimentConfig single = SmallFw();
  single.n_grid = {500};
  single.trials = 1;
  ASSERT_TRUE(EmitPlotSeries(*RunExperiment(single), path).ok());
  const auto lines = Lines(ReadFile(path));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1], "# n mean_excess_risk");
  EXPECT_FALSE(EmitPlotSeries(ExperimentResult{}, path).ok());
}

TEST(RunExperimentTest, AllAlgorithmsKeepBudgets) {
  for (Algorithm a : {Algorithm::kFrankWolfe, Algorithm::kLasso,
                      Algorithm::kSparseLinear, Algorithm::kSparseOpt}) {
    ExperimentConfig cfg;
    cfg.algorithm = a;
    cfg.features = FeatureDistribution::Gaussian(std::sqrt(5.0));
    cfg.noise = NoiseDistribution::Lognormal(0, 0.5);
    if (a == Algorithm::kSparseOpt) {
      cfg.loss = LossModel::LogisticL2(0.01);
      cfg.noise = NoiseDistribution::Logistic(0, 0.5);
    }
    cfg.n_grid = {2000};
    cfg.d_grid = {30};
    cfg.eps_grid = {0.5, 1.0};
    cfg.s_star_grid = {3};
    cfg.trials = 2;
    const auto result = RunExperiment(cfg);
    ASSERT_TRUE(result.ok()) << result.status();
    for (const TrialRecord& r : result->records) {
      EXPECT_FALSE(r.failed) << AlgorithmName(a) << ": " << r.error;
      EXPECT_EQ(r.spent_epsilon, r.declared_epsilon) << AlgorithmName(a);
      EXPECT_EQ(r.spent_delta, r.declared_delta) << AlgorithmName(a);
      EXPECT_TRUE(std::isfinite(r.excess_risk));
    }
  }
}

TEST(RunExperimentTest, RealDataUsesReference) {
  RandomStream rng(3, 0);
  RowMatrix x(400, 5);
  Vector y(400);
  for (int i = 0; i < 400; ++i) {
    for (int j = 0; j < 5; ++j) x(i, j) = rng.StandardNormal();
    y[i] = 0.3 * x(i, 0) - 0.2 * x(i, 3) + 0.1 * rng.StandardNormal();
  }
  const std::string path = TempPath("real.csv");
  ASSERT_TRUE(WriteDatasetCsv(*Dataset::Create(x, y), path).ok());

  ExperimentConfig cfg;
  cfg.algorithm = Algorithm::kFrankWolfe;
  cfg.data_path = path;
  cfg.target_column = 5;
  cfg.n_grid = {300, 0};
  cfg.eps_grid = {1.0};
  cfg.trials = 2;
  cfg.baseline_iterations = 500;
  const auto result = RunExperiment(cfg);
  ASSERT_TRUE(result.ok()) << result.status();
  ASSERT_EQ(result->records.size(), 4u);
  EXPECT_EQ(result->records[0].n, 300);
  EXPECT_EQ(result->records[2].n, 400);
  EXPECT_EQ(result->records[0].d, 5);
  for (const TrialRecord& r : result->records) {
    EXPECT_FALSE(r.failed) << r.error;
    EXPECT_GE(r.excess_risk, -1e-3);
  }

  cfg.data_path = TempPath("absent.csv");
  EXPECT_EQ(RunExperiment(cfg).status().code(), absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace htdp
