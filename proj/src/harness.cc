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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/strip.h"
#include "htdp/csv.h"
#include "htdp/domain.h"
#include "htdp/frank_wolfe.h"
#include "htdp/mechanisms.h"
#include "htdp/random_stream.h"
#include "htdp/sparse_iht.h"
#include "htdp/status_macros.h"

namespace htdp {
namespace {

bool IsSparse(Algorithm algorithm) {
  return algorithm == Algorithm::kSparseLinear ||
         algorithm == Algorithm::kSparseOpt;
}

// Working sparsity the algorithm will use for s*.
int64_t WorkingSparsity(const ExperimentConfig& cfg, int64_t s_star) {
  if (cfg.algorithm == Algorithm::kSparseLinear) return cfg.s_mult * s_star;
  if (cfg.algorithm == Algorithm::kSparseOpt) return 2 * s_star;
  return 0;
}

// Largest eigenvalue of X^T X / n by power iteration.
double GramTopEigenvalue(const Dataset& data) {
  const auto x = data.features();
  Vector v = Vector::Constant(data.dim(), 1.0 / std::sqrt(double(data.dim())));
  double value = 0;
  for (int iter = 0; iter < 100; ++iter) {
    Vector next = x.transpose() * (x * v);
    next /= static_cast<double>(data.num_rows());
    const double norm = next.norm();
    if (norm == 0) return 0;
    v = next / norm;
    if (std::abs(norm - value) <= 1e-10 * norm) return norm;
    value = norm;
  }
  return value;
}

// Keeps the s largest magnitudes (lowest index on ties), zeroing the rest.
Vector HardThreshold(const Vector& v, int64_t s) {
  RandomStream unused(0, 0);
  return *Peeling(v, s, 1.0, 0.5, 0.0, unused);
}

struct PointData {
  Dataset data;
  Vector w_ref;
};

struct GridPoint {
  int64_t n;
  int64_t d;
  double epsilon;
  int64_t s_star;
};

absl::StatusOr<PointData> SyntheticData(const ExperimentConfig& cfg,
                                        const GridPoint& point,
                                        RandomStream& rng) {
  RandomStream truth_rng = rng.Derive(1);
  RandomStream row_rng = rng.Derive(2);
  const Vector w_star = IsSparse(cfg.algorithm)
                            ? GenWStarSparse(point.d, point.s_star, truth_rng)
                            : GenWStarL1(point.d, truth_rng);
  switch (cfg.loss.kind) {
    case LossKind::kLogisticL2: {
      ASSIGN_OR_RETURN(Dataset data,
                       GenLogistic(point.n, point.d, w_star, cfg.features,
                                   cfg.noise, row_rng));
      return PointData{std::move(data), w_star};
    }
    case LossKind::kMeanEstimation: {
      // x = w* + feature draw; the response column is unused.
      RowMatrix x(point.n, point.d);
      for (int64_t i = 0; i < point.n; ++i) {
        for (int64_t j = 0; j < point.d; ++j) {
          x(i, j) = w_star[j] + SampleFeature(cfg.features, row_rng);
        }
      }
      ASSIGN_OR_RETURN(Dataset data,
                       Dataset::Create(std::move(x), Vector::Zero(point.n)));
      return PointData{std::move(data), w_star};
    }
    case LossKind::kSquared:
    case LossKind::kBiweight:
      break;
  }
  ASSIGN_OR_RETURN(Dataset data, GenLinear(point.n, point.d, w_star,
                                           cfg.features, cfg.noise, row_rng));
  return PointData{std::move(data), w_star};
}

struct RunOutput {
  OptimizationResult result;
  int64_t iterations = 0;
  double step_epsilon = 0;
};

absl::StatusOr<RunOutput> RunAlgorithm(const ExperimentConfig& cfg,
                                       const GridPoint& point,
                                       const Dataset& data,
                                       BudgetAccountant& accountant,
                                       RandomStream& init_rng,
                                       RandomStream& algo_rng) {
  const int64_t n = data.num_rows();
  const int64_t d = data.dim();
  RunOutput out;
  switch (cfg.algorithm) {
    case Algorithm::kFrankWolfe: {
      ASSIGN_OR_RETURN(FWConfig fw, DefaultScheduleAlg1(n, point.epsilon));
      fw.track_risk = cfg.track_series;
      ASSIGN_OR_RETURN(const PolytopeDomain domain, PolytopeDomain::L1Ball(d, 1.0));
      const Vector w0 = RandomL1BallPoint(d, 1.0, init_rng);
      ASSIGN_OR_RETURN(out.result, HtDpFrankWolfe(data, cfg.loss, domain,
                                                  accountant, fw, w0, algo_rng));
      out.iterations = fw.iterations;
      return out;
    }
    case Algorithm::kLasso: {
      ASSIGN_OR_RETURN(FWConfig fw, DefaultScheduleAlg2(n, point.epsilon));
      fw.track_risk = cfg.track_series;
      ASSIGN_OR_RETURN(const PolytopeDomain domain, PolytopeDomain::L1Ball(d, 1.0));
      const Vector w0 = RandomL1BallPoint(d, 1.0, init_rng);
      ASSIGN_OR_RETURN(out.result,
                       TruncatedDpFrankWolfeLasso(data, domain, accountant, fw,
                                                  w0, algo_rng));
      out.iterations = fw.iterations;
      out.step_epsilon = LassoStepEpsilon(accountant.budget().epsilon,
                                          accountant.budget().delta,
                                          fw.iterations);
      return out;
    }
    case Algorithm::kSparseLinear: {
      ASSIGN_OR_RETURN(IHTConfig iht,
                       DefaultScheduleAlg3(n, point.epsilon, point.s_star,
                                           cfg.s_mult));
      iht.track_risk = cfg.track_series;
      const Vector w1 = RandomSparseL2BallPoint(d, point.s_star, init_rng);
      ASSIGN_OR_RETURN(out.result,
                       HtSparseLinear(data, accountant, iht, w1, algo_rng));
      out.iterations = iht.iterations;
      return out;
    }
    case Algorithm::kSparseOpt: {
      ASSIGN_OR_RETURN(IHTConfig iht, DefaultScheduleAlg5(n, point.epsilon,
                                                          point.s_star, cfg.c2));
      iht.track_risk = cfg.track_series;
      const Vector w1 = RandomSparseL2BallPoint(d, point.s_star, init_rng);
      ASSIGN_OR_RETURN(out.result, HtSparseOpt(data, cfg.loss, accountant, iht,
                                               w1, algo_rng));
      out.iterations = iht.iterations;
      return out;
    }
  }
  return absl::InternalError("unhandled algorithm");
}

// The declared budget: the robust Frank-Wolfe method is pure epsilon-DP, the
// rest are (epsilon, delta)-DP with delta from the rule.
double DeclaredDelta(const ExperimentConfig& cfg, int64_t n) {
  return cfg.algorithm == Algorithm::kFrankWolfe ? 0.0 : cfg.delta_rule.Delta(n);
}

absl::Status CheckAccountant(const BudgetAccountant& accountant) {
  const PrivacyBudget& b = accountant.budget();
  if (b.spent_epsilon > b.epsilon || b.spent_delta > b.delta) {
    return absl::InternalError("accountant overspent: " +
                               accountant.DebugString());
  }
  return absl::OkStatus();
}

void RunTrial(const ExperimentConfig& cfg, const GridPoint& point,
              const PointData& point_data, RandomStream& trial_rng,
              TrialRecord& record) {
  const auto start = std::chrono::steady_clock::now();
  RandomStream init_rng = trial_rng.Derive(3);
  RandomStream algo_rng = trial_rng.Derive(4);
  record.declared_epsilon = point.epsilon;
  record.declared_delta = DeclaredDelta(cfg, point_data.data.num_rows());

  auto fail = [&record](const absl::Status& status) {
    record.failed = true;
    record.error = std::string(status.message());
    record.excess_risk = std::nan("");
  };
  absl::StatusOr<PrivacyBudget> budget =
      PrivacyBudget::Create(record.declared_epsilon, record.declared_delta);
  if (!budget.ok()) return fail(budget.status());
  BudgetAccountant accountant(*budget);

  absl::StatusOr<RunOutput> run = RunAlgorithm(cfg, point, point_data.data,
                                               accountant, init_rng, algo_rng);
  record.spent_epsilon = accountant.budget().spent_epsilon;
  record.spent_delta = accountant.budget().spent_delta;
  if (absl::Status s = CheckAccountant(accountant); !s.ok()) return fail(s);
  if (!run.ok()) return fail(run.status());
  record.iterations = run->iterations;
  record.step_epsilon = run->step_epsilon;

  absl::StatusOr<double> excess = ComputeExcessRisk(
      cfg.loss, point_data.data, run->result.w, point_data.w_ref);
  if (!excess.ok()) return fail(excess.status());
  if (!std::isfinite(*excess)) {
    return fail(absl::OutOfRangeError("excess risk is not finite"));
  }
  record.excess_risk = *excess;
  if (cfg.track_series) {
    absl::StatusOr<double> ref_risk =
        EmpiricalRisk(cfg.loss, point_data.w_ref, point_data.data);
    if (!ref_risk.ok()) return fail(ref_risk.status());
    for (double r : run->result.risk) record.series.push_back(r - *ref_risk);
    // The final point is the row-wise difference reported above, which is
    // more accurate than a difference of two means.
    if (!record.series.empty()) record.series.back() = record.excess_risk;
  }
  record.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
}

std::string FormatDouble(double v) { return absl::StrFormat("%.10g", v); }

}  // namespace

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kFrankWolfe:
      return "fw";
    case Algorithm::kLasso:
      return "lasso";
    case Algorithm::kSparseLinear:
      return "sparse_linear";
    case Algorithm::kSparseOpt:
      return "sparse_opt";
  }
  return "unknown";
}

absl::StatusOr<Algorithm> ParseAlgorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kFrankWolfe, Algorithm::kLasso,
                      Algorithm::kSparseLinear, Algorithm::kSparseOpt}) {
    if (name == AlgorithmName(a)) return a;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown algorithm '%s' (fw, lasso, sparse_linear, sparse_opt)", name));
}

double DeltaRule::Delta(int64_t n) const {
  if (fixed) return value;
  return std::pow(static_cast<double>(n), -value);
}

std::string DeltaRule::ToString() const {
  return fixed ? absl::StrFormat("fixed:%g", value)
               : absl::StrFormat("n^-%g", value);
}

absl::StatusOr<DeltaRule> DeltaRule::Parse(const std::string& text) {
  DeltaRule rule;
  absl::string_view rest = text;
  if (absl::ConsumePrefix(&rest, "fixed:")) {
    rule.fixed = true;
    if (!absl::SimpleAtod(rest, &rule.value) ||
        !(rule.value > 0 && rule.value < 1)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "bad delta rule '%s': fixed delta must lie in (0, 1)", text));
    }
    return rule;
  }
  if (absl::ConsumePrefix(&rest, "n^-")) {
    if (!absl::SimpleAtod(rest, &rule.value) || !(rule.value > 0)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "bad delta rule '%s': exponent must be positive", text));
    }
    return rule;
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "bad delta rule '%s' (expected n^-<p> or fixed:<v>)", text));
}

absl::Status ExperimentConfig::Validate() const {
  if (trials < 1) return absl::InvalidArgumentError("trials must be >= 1");
  if (n_grid.empty() || eps_grid.empty()) {
    return absl::InvalidArgumentError("n and epsilon grids must be nonempty");
  }
  if (data_path.empty() && d_grid.empty()) {
    return absl::InvalidArgumentError("d grid must be nonempty");
  }
  for (int64_t n : n_grid) {
    if (n < 0 || (n == 0 && data_path.empty())) {
      return absl::InvalidArgumentError(absl::StrFormat("bad n = %d", n));
    }
  }
  for (int64_t d : d_grid) {
    if (d < 1) return absl::InvalidArgumentError(absl::StrFormat("bad d = %d", d));
  }
  for (double eps : eps_grid) {
    if (!(eps > 0) || !std::isfinite(eps)) {
      return absl::InvalidArgumentError(absl::StrFormat("bad epsilon = %g", eps));
    }
  }
  if (IsSparse(algorithm)) {
    if (s_star_grid.empty()) {
      return absl::InvalidArgumentError("s* grid must be nonempty");
    }
    for (int64_t s : s_star_grid) {
      if (s < 1) return absl::InvalidArgumentError("s* must be >= 1");
    }
    if (s_mult < 1) return absl::InvalidArgumentError("s multiplier must be >= 1");
    if (!(c2 > 0)) return absl::InvalidArgumentError("c2 must be > 0");
  }
  if ((algorithm == Algorithm::kLasso ||
       algorithm == Algorithm::kSparseLinear) &&
      loss.kind != LossKind::kSquared) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s supports only the squared loss", AlgorithmName(algorithm)));
  }
  if (algorithm == Algorithm::kFrankWolfe &&
      loss.kind == LossKind::kMeanEstimation) {
    return absl::InvalidArgumentError("fw does not support the mean loss");
  }
  if (baseline_iterations < 1) {
    return absl::InvalidArgumentError("baseline iterations must be >= 1");
  }
  RETURN_IF_ERROR(loss.Validate());
  RETURN_IF_ERROR(features.Validate());
  return noise.Validate();
}

absl::StatusOr<double> ComputeExcessRisk(const LossModel& model,
                                         const Dataset& data, const Vector& w,
                                         const Vector& w_ref) {
  if (w.size() != data.dim() || w_ref.size() != data.dim()) {
    return absl::InvalidArgumentError("parameter dimension mismatch");
  }
  const auto x = data.features();
  const auto y = data.responses();
  const int64_t n = data.num_rows();
  double total = 0;
  if (model.kind == LossKind::kSquared) {
    const Vector a = x * w - y;
    const Vector b = x * w_ref - y;
    for (int64_t i = 0; i < n; ++i) total += (a[i] - b[i]) * (a[i] + b[i]);
    return total / static_cast<double>(n);
  }
  for (int64_t i = 0; i < n; ++i) {
    ASSIGN_OR_RETURN(const double lw, LossValue(model, w, x.row(i).transpose(), y[i]));
    ASSIGN_OR_RETURN(const double lr,
                     LossValue(model, w_ref, x.row(i).transpose(), y[i]));
    total += lw - lr;
  }
  return total / static_cast<double>(n);
}

absl::StatusOr<Vector> ReferenceSolution(Algorithm algorithm,
                                         const LossModel& model,
                                         const Dataset& data, int64_t s,
                                         int64_t iterations) {
  const int64_t d = data.dim();
  if (!IsSparse(algorithm)) {
    ASSIGN_OR_RETURN(const PolytopeDomain domain, PolytopeDomain::L1Ball(d, 1.0));
    ASSIGN_OR_RETURN(const OptimizationResult result,
                     NonPrivateFrankWolfe(data, model, domain, iterations,
                                          Vector::Zero(d)));
    return result.w;
  }
  if (s < 1 || s > d) {
    return absl::InvalidArgumentError(
        absl::StrFormat("sparsity %d outside [1, %d]", s, d));
  }
  // Step 1/L with L a smoothness bound of the empirical risk.
  const double gram = GramTopEigenvalue(data);
  double smoothness = 2.0;
  switch (model.kind) {
    case LossKind::kSquared:
    case LossKind::kBiweight:
      smoothness = 2.0 * gram;
      break;
    case LossKind::kLogisticL2:
      smoothness = 0.25 * gram + model.reg_lambda;
      break;
    case LossKind::kMeanEstimation:
      smoothness = 2.0;
      break;
  }
  if (!(smoothness > 0)) smoothness = 1.0;
  Vector w = Vector::Zero(d);
  for (int64_t t = 0; t < iterations; ++t) {
    ASSIGN_OR_RETURN(const Vector g, EmpiricalGradient(model, w, data));
    w = HardThreshold(w - g / smoothness, s);
    if (algorithm == Algorithm::kSparseLinear) w = ProjectL2Ball(w, 1.0);
  }
  return w;
}

absl::StatusOr<ExperimentResult> RunExperiment(const ExperimentConfig& cfg) {
  RETURN_IF_ERROR(cfg.Validate());
  const bool real = !cfg.data_path.empty();
  std::optional<Dataset> file_data;
  if (real) {
    ASSIGN_OR_RETURN(Dataset loaded, LoadCsv(cfg.data_path, cfg.target_column));
    file_data = cfg.standardize ? StandardizeFeatures(loaded) : loaded;
  }
  const std::vector<int64_t> d_grid =
      real ? std::vector<int64_t>{file_data->dim()} : cfg.d_grid;
  const std::vector<int64_t> s_grid =
      IsSparse(cfg.algorithm) ? cfg.s_star_grid : std::vector<int64_t>{0};

  // Reference solutions on real data, keyed by (rows, working sparsity).
  std::map<std::pair<int64_t, int64_t>, Vector> reference_cache;

  const RandomStream root(cfg.seed, static_cast<uint64_t>(cfg.algorithm));
  ExperimentResult result;
  uint64_t point_index = 0;
  for (int64_t n_value : cfg.n_grid) {
    for (int64_t d : d_grid) {
      for (double eps : cfg.eps_grid) {
        for (int64_t s_star : s_grid) {
          RandomStream point_rng = root.Derive(point_index++);
          std::optional<PointData> real_point;
          int64_t n = n_value;
          if (real) {
            const int64_t rows = file_data->num_rows();
            n = (n_value == 0 || n_value > rows) ? rows : n_value;
            const Dataset subset = file_data->Slice(0, n);
            const int64_t s = WorkingSparsity(cfg, s_star);
            if (IsSparse(cfg.algorithm) && s > d) {
              return absl::InvalidArgumentError(absl::StrFormat(
                  "working sparsity %d exceeds data dimension %d", s, d));
            }
            auto key = std::make_pair(n, s);
            auto it = reference_cache.find(key);
            if (it == reference_cache.end()) {
              ASSIGN_OR_RETURN(Vector w_ref,
                               ReferenceSolution(cfg.algorithm, cfg.loss, subset,
                                                 s, cfg.baseline_iterations));
              it = reference_cache.emplace(key, std::move(w_ref)).first;
            }
            real_point = PointData{subset, it->second};
          }
          const GridPoint point{n, d, eps, s_star};
          for (int64_t trial = 0; trial < cfg.trials; ++trial) {
            RandomStream trial_rng = point_rng.Derive(trial);
            TrialRecord record;
            record.algorithm = cfg.algorithm;
            record.n = n;
            record.d = d;
            record.epsilon = eps;
            record.s_star = s_star;
            record.trial = trial;
            if (real) {
              RunTrial(cfg, point, *real_point, trial_rng, record);
            } else {
              absl::StatusOr<PointData> synthetic =
                  SyntheticData(cfg, point, trial_rng);
              if (!synthetic.ok()) {
                record.failed = true;
                record.error = std::string(synthetic.status().message());
                record.excess_risk = std::nan("");
              } else {
                RunTrial(cfg, point, *synthetic, trial_rng, record);
              }
            }
            result.records.push_back(std::move(record));
          }
        }
      }
    }
  }
  result.summaries = Summarize(result.records);
  return result;
}

std::vector<GridPointSummary> Summarize(const std::vector<TrialRecord>& records) {
  std::vector<GridPointSummary> out;
  using Key = std::tuple<int, int64_t, int64_t, double, int64_t>;
  std::map<Key, size_t> index;
  std::vector<double> risk_sums;
  std::vector<double> wall_sums;
  for (const TrialRecord& r : records) {
    const Key key{static_cast<int>(r.algorithm), r.n, r.d, r.epsilon, r.s_star};
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, out.size()).first;
      GridPointSummary summary;
      summary.algorithm = r.algorithm;
      summary.n = r.n;
      summary.d = r.d;
      summary.epsilon = r.epsilon;
      summary.s_star = r.s_star;
      out.push_back(summary);
      risk_sums.push_back(0);
      wall_sums.push_back(0);
    }
    GridPointSummary& summary = out[it->second];
    if (r.failed) {
      ++summary.failed;
      continue;
    }
    ++summary.completed;
    risk_sums[it->second] += r.excess_risk;
    wall_sums[it->second] += r.wall_ms;
  }
  for (size_t i = 0; i < out.size(); ++i) {
    const double c = static_cast<double>(out[i].completed);
    out[i].mean_excess_risk = c > 0 ? risk_sums[i] / c : std::nan("");
    out[i].mean_wall_ms = c > 0 ? wall_sums[i] / c : std::nan("");
  }
  return out;
}

absl::Status WriteResultsCsv(const ExperimentResult& result,
                             const std::string& path, bool wall_time) {
  std::string text =
      "algorithm,n,d,epsilon,s_star,trial,excess_risk,wall_ms,failed\n";
  for (const TrialRecord& r : result.records) {
    absl::StrAppend(&text, AlgorithmName(r.algorithm), ",", r.n, ",", r.d, ",",
                    FormatDouble(r.epsilon), ",", r.s_star, ",", r.trial, ",",
                    FormatDouble(r.excess_risk), ",",
                    wall_time ? FormatDouble(r.wall_ms) : "", ",",
                    r.failed ? 1 : 0, "\n");
  }
  for (const GridPointSummary& s : result.summaries) {
    absl::StrAppend(&text, AlgorithmName(s.algorithm), ",", s.n, ",", s.d, ",",
                    FormatDouble(s.epsilon), ",", s.s_star, ",AGG,",
                    FormatDouble(s.mean_excess_risk), ",",
                    wall_time ? FormatDouble(s.mean_wall_ms) : "", ",",
                    s.failed, "\n");
  }
  const absl::Status status = WriteFileAtomically(path, text);
  if (!status.ok()) {
    return absl::Status(status.code(), absl::StrCat("results CSV '", path,
                                                    "': ", status.message()));
  }
  return absl::OkStatus();
}

absl::Status EmitPlotSeries(const ExperimentResult& result,
                            const std::string& path) {
  const std::vector<GridPointSummary>& points = result.summaries;
  if (points.empty()) {
    return absl::InvalidArgumentError("no results to plot");
  }
  std::set<int64_t> ns, ss;
  std::set<double> eps;
  for (const GridPointSummary& p : points) {
    ns.insert(p.n);
    eps.insert(p.epsilon);
    ss.insert(p.s_star);
  }
  enum class Axis { kN, kEpsilon, kSStar };
  Axis axis = Axis::kN;
  if (ns.size() <= 1 && eps.size() > 1) axis = Axis::kEpsilon;
  if (ns.size() <= 1 && eps.size() <= 1 && ss.size() > 1) axis = Axis::kSStar;
  const char* axis_name =
      axis == Axis::kN ? "n" : (axis == Axis::kEpsilon ? "epsilon" : "s_star");

  // Series label built from the grid values not on the x axis.
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const GridPointSummary& p : points) {
    std::string label = absl::StrCat("d=", p.d);
    if (axis != Axis::kN) absl::StrAppend(&label, " n=", p.n);
    if (axis != Axis::kEpsilon) {
      absl::StrAppend(&label, " epsilon=", FormatDouble(p.epsilon));
    }
    if (axis != Axis::kSStar) absl::StrAppend(&label, " s_star=", p.s_star);
    const double x = axis == Axis::kN ? static_cast<double>(p.n)
                     : axis == Axis::kEpsilon ? p.epsilon
                                              : static_cast<double>(p.s_star);
    if (!series.count(label)) order.push_back(label);
    series[label].emplace_back(x, p.mean_excess_risk);
  }
  std::string text;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i > 0) text += "\n";
    absl::StrAppend(&text, "# series ", AlgorithmName(points.front().algorithm),
                    " ", order[i], "\n# ", axis_name, " mean_excess_risk\n");
    for (const auto& [x, y] : series[order[i]]) {
      absl::StrAppend(&text, FormatDouble(x), " ", FormatDouble(y), "\n");
    }
  }
  const absl::Status status = WriteFileAtomically(path, text);
  if (!status.ok()) {
    return absl::Status(status.code(), absl::StrCat("plot series '", path,
                                                    "': ", status.message()));
  }
  return absl::OkStatus();
}

}  // namespace htdp
