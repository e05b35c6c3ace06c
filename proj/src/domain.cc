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

#include "htdp/domain.h"

#include <algorithm>
#include <cmath>

#include "absl/base/macros.h"
#include "absl/strings/str_format.h"

namespace htdp {

absl::StatusOr<PolytopeDomain> PolytopeDomain::FromVertices(
    std::vector<Vector> vertices) {
  if (vertices.empty()) {
    return absl::InvalidArgumentError("polytope needs at least one vertex");
  }
  const int64_t dim = vertices.front().size();
  if (dim < 1) return absl::InvalidArgumentError("vertex dimension must be >= 1");
  for (const Vector& v : vertices) {
    if (v.size() != dim) {
      return absl::InvalidArgumentError("vertices have mismatched dimensions");
    }
    if (!v.allFinite()) return absl::InvalidArgumentError("non-finite vertex");
  }
  PolytopeDomain domain;
  domain.dim_ = dim;
  domain.vertices_ = std::move(vertices);
  for (const Vector& v : domain.vertices_) {
    domain.radius_ = std::max(domain.radius_, v.lpNorm<1>());
  }
  // Zero only for a single-point polytope, where selection is trivial.
  domain.l1_diameter_ = domain.RecomputeL1Diameter();
  return domain;
}

absl::StatusOr<PolytopeDomain> PolytopeDomain::L1Ball(int64_t dim,
                                                      double radius) {
  if (dim < 1) return absl::InvalidArgumentError("dimension must be >= 1");
  if (!(radius > 0) || !std::isfinite(radius)) {
    return absl::InvalidArgumentError("l1 radius must be positive and finite");
  }
  PolytopeDomain domain;
  domain.dim_ = dim;
  domain.is_l1_ball_ = true;
  domain.radius_ = radius;
  domain.l1_diameter_ = 2.0 * radius;
  return domain;
}

int64_t PolytopeDomain::num_vertices() const {
  return is_l1_ball_ ? 2 * dim_ : static_cast<int64_t>(vertices_.size());
}

double PolytopeDomain::RecomputeL1Diameter() const {
  const int64_t count = num_vertices();
  double best = 0;
  for (int64_t i = 0; i < count; ++i) {
    const Vector vi = Vertex(i);
    for (int64_t j = i + 1; j < count; ++j) {
      best = std::max(best, (vi - Vertex(j)).lpNorm<1>());
    }
  }
  return best;
}

Vector PolytopeDomain::Vertex(int64_t index) const {
  ABSL_ASSERT(index >= 0 && index < num_vertices());
  if (!is_l1_ball_) return vertices_[index];
  Vector v = Vector::Zero(dim_);
  v[index % dim_] = index < dim_ ? radius_ : -radius_;
  return v;
}

std::vector<double> PolytopeDomain::LinearScores(const Vector& g) const {
  ABSL_ASSERT(g.size() == dim_);
  std::vector<double> scores(num_vertices());
  if (is_l1_ball_) {
    for (int64_t j = 0; j < dim_; ++j) {
      scores[j] = -radius_ * g[j];
      scores[dim_ + j] = radius_ * g[j];
    }
    return scores;
  }
  for (size_t i = 0; i < vertices_.size(); ++i) {
    scores[i] = -vertices_[i].dot(g);
  }
  return scores;
}

void PolytopeDomain::MoveToward(Vector& w, int64_t index, double eta) const {
  ABSL_ASSERT(w.size() == dim_);
  w *= (1.0 - eta);
  if (is_l1_ball_) {
    w[index % dim_] += eta * (index < dim_ ? radius_ : -radius_);
  } else {
    w += eta * vertices_[index];
  }
}

absl::Status PolytopeDomain::CheckMember(const Vector& w) const {
  if (w.size() != dim_) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "point has dimension %d, domain has %d", w.size(), dim_));
  }
  if (is_l1_ball_ && w.lpNorm<1>() > radius_ + 1e-9) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "point has l1 norm %g outside the ball of radius %g", w.lpNorm<1>(),
        radius_));
  }
  return absl::OkStatus();
}

absl::Status SparsityDomain::Validate(int64_t dim) const {
  if (target_sparsity < 1 || working_sparsity < target_sparsity ||
      working_sparsity > dim) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need 1 <= s* (%d) <= s (%d) <= d (%d)", target_sparsity,
        working_sparsity, dim));
  }
  if (!(l2_radius > 0)) return absl::InvalidArgumentError("l2 radius must be > 0");
  return absl::OkStatus();
}

}  // namespace htdp
