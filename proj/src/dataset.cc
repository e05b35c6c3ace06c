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

#include "htdp/dataset.h"

#include <cmath>

#include "absl/base/macros.h"
#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace htdp {

absl::StatusOr<Dataset> Dataset::Create(RowMatrix features, Vector responses) {
  if (features.rows() < 1 || features.cols() < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dataset needs n >= 1 and d >= 1, got %d x %d",
                        features.rows(), features.cols()));
  }
  if (features.rows() != responses.size()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("feature rows (%d) != responses (%d)", features.rows(),
                        responses.size()));
  }
  if (!features.allFinite()) {
    return absl::InvalidArgumentError("features contain NaN or infinity");
  }
  if (!responses.allFinite()) {
    return absl::InvalidArgumentError("responses contain NaN or infinity");
  }
  const int64_t rows = features.rows();
  auto storage = std::make_shared<const Storage>(
      Storage{std::move(features), std::move(responses)});
  return Dataset(std::move(storage), 0, rows);
}

Dataset Dataset::Slice(int64_t begin, int64_t count) const {
  ABSL_ASSERT(begin >= 0 && count >= 1 && begin + count <= rows_);
  return Dataset(storage_, begin_ + begin, count);
}

absl::StatusOr<std::vector<Dataset>> SplitDataset(const Dataset& data,
                                                  int64_t parts) {
  if (parts <= 0 || parts > data.num_rows()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "cannot split %d rows into %d parts", data.num_rows(), parts));
  }
  const int64_t m = data.num_rows() / parts;
  std::vector<Dataset> out;
  out.reserve(parts);
  for (int64_t t = 0; t < parts; ++t) out.push_back(data.Slice(t * m, m));
  return out;
}

Dataset ShrinkDataset(const Dataset& data, double k) {
  ABSL_ASSERT(k > 0);
  RowMatrix x = data.features().unaryExpr(
      [k](double v) { return ShrinkScalar(v, k); });
  Vector y =
      data.responses().unaryExpr([k](double v) { return ShrinkScalar(v, k); });
  // Shrinking finite values keeps them finite, so Create cannot fail.
  return *Dataset::Create(std::move(x), std::move(y));
}

Vector ProjectL2Ball(const Vector& v, double radius) {
  ABSL_ASSERT(radius > 0);
  const double norm = v.norm();
  if (norm <= radius) return v;
  return v * (radius / norm);
}

}  // namespace htdp
