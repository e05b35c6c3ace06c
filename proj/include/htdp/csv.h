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


#ifndef HTDP_CSV_H_
#define HTDP_CSV_H_

#include <cstdint>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "htdp/dataset.h"

namespace htdp {

// Reads a comma-separated numeric table. The first line is treated as a
// header when any of its cells fails to parse as a number. Column
// `target_column` (0-based) becomes the response, all others the features.
// `max_rows` = 0 reads every row.
//
// Errors: NotFound for a missing file, DataLoss for a malformed cell (with
// its 1-based line and column), OutOfRange for a bad target column.
absl::StatusOr<Dataset> LoadCsv(const std::string& path, int64_t target_column,
                                int64_t max_rows = 0);

// Writes features followed by the response as the last column, with a
// header x0,...,x{d-1},y. Written to a temporary file and renamed.
absl::Status WriteDatasetCsv(const Dataset& data, const std::string& path);

// Writes `contents` to `path` through a temporary file and a rename, so
// readers never see a partial file.
absl::Status WriteFileAtomically(const std::string& path,
                                 const std::string& contents);

// Rescales every feature column to zero mean and unit variance (constant
// columns are only centred). Responses are unchanged.
Dataset StandardizeFeatures(const Dataset& data);

}  // namespace htdp

#endif  // HTDP_CSV_H_
