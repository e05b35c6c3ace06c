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

#ifndef HTDP_DOMAIN_H_
#define HTDP_DOMAIN_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "htdp/dataset.h"

namespace htdp {

// A polytope W = conv(V) given by its vertex set.
//
// The l1-ball {w : ||w||_1 <= r} is represented implicitly: its 2d vertices
// are +r e_j (index j) and -r e_j (index d + j) and are never materialized,
// so linear scoring over V costs O(d).
class PolytopeDomain {
 public:
  // Explicit vertex list. All vertices must share one dimension >= 1.
  static absl::StatusOr<PolytopeDomain> FromVertices(std::vector<Vector> vertices);

  static absl::StatusOr<PolytopeDomain> L1Ball(int64_t dim, double radius);

  int64_t dim() const { return dim_; }
  int64_t num_vertices() const;
  bool is_l1_ball() const { return is_l1_ball_; }
  double l1_radius() const { return radius_; }

  // ||W||_1 = max over vertex pairs of the l1 distance.
  double l1_diameter() const { return l1_diameter_; }

  // Recomputes the diameter from the vertex set by brute force.
  double RecomputeL1Diameter() const;

  Vector Vertex(int64_t index) const;

  // u(v_i) = -<v_i, g> for every vertex, in vertex-index order.
  std::vector<double> LinearScores(const Vector& g) const;

  // w <- (1 - eta) w + eta v_i.
  void MoveToward(Vector& w, int64_t index, double eta) const;

  // For l1-ball domains, checks ||w||_1 <= r + 1e-9. Other domains only get a
  // dimension check.
  absl::Status CheckMember(const Vector& w) const;

 private:
  PolytopeDomain() = default;

  int64_t dim_ = 0;
  bool is_l1_ball_ = false;
  double radius_ = 0;
  double l1_diameter_ = 0;
  std::vector<Vector> vertices_;
};

// Sparsity constraint {w : ||w||_0 <= s*} with the working sparsity s >= s*
// used by hard thresholding.
struct SparsityDomain {
  int64_t target_sparsity = 1;
  int64_t working_sparsity = 1;
  double l2_radius = 1.0;

  // s* <= s <= d, both positive, radius > 0.
  absl::Status Validate(int64_t dim) const;
};

}  // namespace htdp

#endif  // HTDP_DOMAIN_H_
