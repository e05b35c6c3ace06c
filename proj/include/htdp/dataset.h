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

#ifndef HTDP_DATASET_H_
#define HTDP_DATASET_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"

namespace htdp {

using Vector = Eigen::VectorXd;
using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// n labeled samples (x_i, y_i) with x_i in R^d, stored row-major.
//
// A Dataset is an immutable view over shared storage. Slices produced by
// Slice() and SplitDataset() reference the parent's rows without copying, so
// partitioning a large dataset is O(parts).
class Dataset {
 public:
  // Fails unless n >= 1, d >= 1, the row counts agree and every entry is
  // finite.
  static absl::StatusOr<Dataset> Create(RowMatrix features, Vector responses);

  int64_t num_rows() const { return rows_; }
  int64_t dim() const { return storage_->features.cols(); }

  Eigen::Map<const RowMatrix> features() const {
    return Eigen::Map<const RowMatrix>(
        storage_->features.data() + begin_ * dim(), rows_, dim());
  }
  Eigen::Map<const Vector> responses() const {
    return Eigen::Map<const Vector>(storage_->responses.data() + begin_, rows_);
  }
  Eigen::Map<const Vector> row(int64_t i) const {
    return Eigen::Map<const Vector>(
        storage_->features.data() + (begin_ + i) * dim(), dim());
  }
  double response(int64_t i) const { return storage_->responses[begin_ + i]; }

  // Rows [begin, begin + count) of this dataset. Requires a valid range.
  Dataset Slice(int64_t begin, int64_t count) const;

  // Position of this dataset's first row within the underlying storage;
  // lets callers verify which rows an algorithm touched.
  int64_t storage_offset() const { return begin_; }
  const void* storage_id() const { return storage_.get(); }

 private:
  struct Storage {
    RowMatrix features;
    Vector responses;
  };

  Dataset(std::shared_ptr<const Storage> storage, int64_t begin, int64_t rows)
      : storage_(std::move(storage)), begin_(begin), rows_(rows) {}

  std::shared_ptr<const Storage> storage_;
  int64_t begin_ = 0;
  int64_t rows_ = 0;
};

// Splits `data` into `parts` disjoint consecutive blocks of m = floor(n/parts)
// rows each. The trailing n mod parts rows are dropped.
absl::StatusOr<std::vector<Dataset>> SplitDataset(const Dataset& data,
                                                  int64_t parts);

// sign(x) * min(|x|, k).
inline double ShrinkScalar(double x, double k) {
  if (x > k) return k;
  if (x < -k) return -k;
  return x;
}

// Applies ShrinkScalar(., k) to every feature entry and every response.
// Requires k > 0.
Dataset ShrinkDataset(const Dataset& data, double k);

// Euclidean projection onto the ball of the given radius (> 0).
Vector ProjectL2Ball(const Vector& v, double radius);

}  // namespace htdp

#endif  // HTDP_DATASET_H_
