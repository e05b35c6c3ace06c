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


#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "htdp/csv.h"

namespace htdp {
namespace {

// Splits one line into fields. Double quotes group a field and "" inside
// quotes is a literal quote.
std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

bool ParseCell(absl::string_view text, double& value) {
  text = absl::StripAsciiWhitespace(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() &&
         std::isfinite(value);
}

}  // namespace

absl::StatusOr<Dataset> LoadCsv(const std::string& path, int64_t target_column,
                                int64_t max_rows) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrFormat("cannot open '%s'", path));
  }
  if (max_rows < 0) {
    return absl::InvalidArgumentError("max_rows must be >= 0");
  }
  std::vector<double> values;
  int64_t columns = -1;
  int64_t rows = 0;
  int64_t line_number = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    const std::vector<std::string> fields = SplitCsvLine(line);
    std::vector<double> parsed(fields.size());
    int64_t bad_column = -1;
    for (size_t j = 0; j < fields.size(); ++j) {
      if (!ParseCell(fields[j], parsed[j])) {
        bad_column = static_cast<int64_t>(j);
        break;
      }
    }
    if (columns < 0) {
      columns = static_cast<int64_t>(fields.size());
      if (target_column < 0 || target_column >= columns) {
        return absl::OutOfRangeError(absl::StrFormat(
            "%s: target column %d out of range, file has %d columns", path,
            target_column, columns));
      }
      if (columns < 2) {
        return absl::DataLossError(
            absl::StrFormat("%s: need at least two columns", path));
      }
      if (bad_column >= 0) continue;  // header line
    }
    if (static_cast<int64_t>(fields.size()) != columns) {
      return absl::DataLossError(absl::StrFormat(
          "%s: line %d has %d fields, expected %d", path, line_number,
          fields.size(), columns));
    }
    if (bad_column >= 0) {
      return absl::DataLossError(absl::StrFormat(
          "%s: line %d, column %d: '%s' is not a finite number", path,
          line_number, bad_column + 1, fields[bad_column]));
    }
    values.insert(values.end(), parsed.begin(), parsed.end());
    ++rows;
    if (max_rows > 0 && rows >= max_rows) break;
  }
  if (rows == 0) {
    return absl::DataLossError(absl::StrFormat("%s: no data rows", path));
  }
  RowMatrix features(rows, columns - 1);
  Vector responses(rows);
  for (int64_t i = 0; i < rows; ++i) {
    int64_t out = 0;
    for (int64_t j = 0; j < columns; ++j) {
      const double v = values[i * columns + j];
      if (j == target_column) {
        responses[i] = v;
      } else {
        features(i, out++) = v;
      }
    }
  }
  return Dataset::Create(std::move(features), std::move(responses));
}

absl::Status WriteFileAtomically(const std::string& path,
                                 const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      return absl::UnavailableError(
          absl::StrFormat("cannot open '%s' for writing", tmp));
    }
    out << contents;
    out.flush();
    if (!out) {
      return absl::DataLossError(absl::StrFormat("write to '%s' failed", tmp));
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return absl::UnavailableError(
        absl::StrFormat("cannot rename '%s' to '%s'", tmp, path));
  }
  return absl::OkStatus();
}

absl::Status WriteDatasetCsv(const Dataset& data, const std::string& path) {
  std::string text;
  for (int64_t j = 0; j < data.dim(); ++j) absl::StrAppend(&text, "x", j, ",");
  text += "y\n";
  for (int64_t i = 0; i < data.num_rows(); ++i) {
    const auto row = data.row(i);
    for (int64_t j = 0; j < data.dim(); ++j) {
      absl::StrAppendFormat(&text, "%.17g,", row[j]);
    }
    absl::StrAppendFormat(&text, "%.17g\n", data.response(i));
  }
  return WriteFileAtomically(path, text);
}

Dataset StandardizeFeatures(const Dataset& data) {
  RowMatrix x = data.features();
  const double n = static_cast<double>(data.num_rows());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double mean = x.col(j).sum() / n;
    x.col(j).array() -= mean;
    const double sd = std::sqrt(x.col(j).squaredNorm() / n);
    if (sd > 0) x.col(j) /= sd;
  }
  return *Dataset::Create(std::move(x), Vector(data.responses()));
}

}  // namespace htdp
