// Copyright 2026 The scpkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <zlib.h>

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <system_error>
#include <vector>

#include "scpkit/core/error.hpp"
#include "scpkit/core/random.hpp"
#include "scpkit/core/sampling.hpp"
#include "scpkit/problems/svm.hpp"

namespace scpkit::data {

inline constexpr std::size_t kCovertypeFeatures = 54;
inline constexpr std::size_t kCovertypeUciRows = 581012;
inline constexpr std::size_t kCovertypeQuotedRows = 580012;

// Raw integer table: 54 feature columns and the cover class (1-7) per row.
struct CovertypeTable {
  std::vector<std::int32_t> features;  // row-major, rows × 54
  std::vector<std::int8_t> labels;
  std::string path;

  std::size_t rows() const { return labels.size(); }

  // Empty when the row count is the canonical one.
  std::string RowCountWarning() const {
    if (rows() == kCovertypeUciRows) return {};
    if (rows() == kCovertypeQuotedRows) {
      return "covertype file has 580,012 rows; the UCI distribution has 581,012";
    }
    return "covertype file has " + std::to_string(rows()) + " rows; expected 581,012";
  }
};

// Reads comma-separated covtype data, plain or gzip-compressed.
inline CovertypeTable ReadCovertype(const std::string& path) {
  std::unique_ptr<gzFile_s, int (*)(gzFile)> file(gzopen(path.c_str(), "rb"), gzclose);
  Require(file != nullptr, ErrorCode::kIoError, "cannot open '" + path + "'");
  gzbuffer(file.get(), 1 << 18);
  CovertypeTable table;
  table.path = path;
  table.features.reserve(kCovertypeUciRows * kCovertypeFeatures);
  table.labels.reserve(kCovertypeUciRows);
  std::vector<char> line(4096);
  std::size_t line_number = 0;
  while (gzgets(file.get(), line.data(), static_cast<int>(line.size())) != nullptr) {
    ++line_number;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::kParseError,
                  path + ":" + std::to_string(line_number) + ": " + what);
    };
    const char* p = line.data();
    const char* end = p + std::char_traits<char>::length(p);
    if (end > p && end[-1] != '\n' && !gzeof(file.get())) fail("line too long");
    while (end > p && (end[-1] == '\n' || end[-1] == '\r' || end[-1] == ' ')) --end;
    if (p == end) continue;
    std::int32_t values[kCovertypeFeatures + 1];
    for (std::size_t c = 0; c <= kCovertypeFeatures; ++c) {
      const auto [next, ec] = std::from_chars(p, end, values[c]);
      if (ec != std::errc()) fail("field " + std::to_string(c + 1) + " is not an integer");
      p = next;
      if (c < kCovertypeFeatures) {
        if (p == end || *p != ',') fail("expected 55 comma-separated fields");
        ++p;
      }
    }
    if (p != end) fail("expected 55 comma-separated fields");
    if (values[kCovertypeFeatures] < 1 || values[kCovertypeFeatures] > 7) fail("class label outside 1-7");
    table.features.insert(table.features.end(), values, values + kCovertypeFeatures);
    table.labels.push_back(static_cast<std::int8_t>(values[kCovertypeFeatures]));
  }
  int errnum = Z_OK;
  gzerror(file.get(), &errnum);
  Require(errnum == Z_OK || errnum == Z_STREAM_END, ErrorCode::kIoError,
          "read error in '" + path + "'");
  return table;
}

struct CovertypeSplit {
  problems::SvmData train;
  problems::SvmData test;
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
};

// Two disjoint uniform subsamples of n rows each; class 2 becomes +1 and
// every other class −1. Features are used as stored.
inline CovertypeSplit SplitCovertype(const CovertypeTable& table, std::size_t n, std::uint64_t seed,
                                     double c = 1.0) {
  Require(n >= 1, ErrorCode::kInvalidArgument, "subsample size must be >= 1");
  Require(2 * n <= table.rows(), ErrorCode::kInvalidArgument,
          "need 2N <= " + std::to_string(table.rows()) + " rows");
  SubsetSample pool = SampleWithoutReplacement(table.rows(), 2 * n, MixSeed(seed, 0));
  Rng rng(MixSeed(seed, 1));
  std::vector<std::size_t>& rows = pool.indices;
  for (std::size_t i = rows.size() - 1; i > 0; --i) {
    std::swap(rows[i], rows[static_cast<std::size_t>(rng.UniformIndex(i + 1))]);
  }
  CovertypeSplit split;
  split.train_rows.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n));
  split.test_rows.assign(rows.begin() + static_cast<std::ptrdiff_t>(n), rows.end());
  std::sort(split.train_rows.begin(), split.train_rows.end());
  std::sort(split.test_rows.begin(), split.test_rows.end());
  auto build = [&](const std::vector<std::size_t>& picked) {
    problems::SvmData data;
    data.c = c;
    data.x.resize(static_cast<Eigen::Index>(picked.size()), static_cast<Eigen::Index>(kCovertypeFeatures));
    data.y.resize(static_cast<Eigen::Index>(picked.size()));
    for (std::size_t i = 0; i < picked.size(); ++i) {
      const std::int32_t* src = &table.features[picked[i] * kCovertypeFeatures];
      for (std::size_t j = 0; j < kCovertypeFeatures; ++j) {
        data.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = src[j];
      }
      data.y(static_cast<Eigen::Index>(i)) = table.labels[picked[i]] == 2 ? 1.0 : -1.0;
    }
    return data;
  };
  split.train = build(split.train_rows);
  split.test = build(split.test_rows);
  return split;
}

inline CovertypeSplit LoadCovertype(const std::string& path, std::uint64_t seed, std::size_t n,
                                    double c = 1.0) {
  return SplitCovertype(ReadCovertype(path), n, seed, c);
}

}  // namespace scpkit::data
