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

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "scpkit/core/error.hpp"

namespace scpkit::data {

// One solver run of one benchmark cell.
struct ResultRow {
  std::string experiment;
  std::string family;
  std::size_t population = 0;  // N
  std::size_t size = 0;        // p or k
  double sigma = 0.0;
  std::string mode;
  std::size_t subset_size = 0;  // n
  std::uint64_t seed = 0;
  double master_seconds = 0.0;
  double oracle_seconds = 0.0;
  double total_seconds = 0.0;
  std::size_t iterations = 0;
  double objective = 0.0;
  std::string metric_name;
  double metric = 0.0;
  std::string fingerprint;
  std::string status;

  bool operator==(const ResultRow&) const = default;
};

inline constexpr std::string_view kResultHeader =
    "experiment,family,N,size,sigma,mode,n,seed,master_seconds,oracle_seconds,total_seconds,"
    "iterations,objective,metric_name,metric,fingerprint,status";

namespace internal {

inline std::string FormatDouble(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

inline std::string Quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

template <class T>
T ParseNumber(const std::string& text, std::size_t line) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  Require(ec == std::errc() && end == text.data() + text.size(), ErrorCode::kParseError,
          "line " + std::to_string(line) + ": bad number '" + text + "'");
  return value;
}

// Splits RFC 4180 records. Quoted fields may contain commas, doubled quotes
// and line breaks.
inline std::vector<std::vector<std::string>> ParseCsv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && in.peek() == '\n') in.get(ch);
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += ch;
    }
  }
  Require(!quoted, ErrorCode::kParseError, "unterminated quoted field");
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace internal

inline void WriteResultsCsv(std::ostream& out, const std::vector<ResultRow>& rows) {
  using internal::FormatDouble;
  using internal::Quote;
  out << kResultHeader << "\r\n";
  for (const ResultRow& r : rows) {
    out << Quote(r.experiment) << ',' << Quote(r.family) << ',' << r.population << ',' << r.size
        << ',' << FormatDouble(r.sigma) << ',' << Quote(r.mode) << ',' << r.subset_size << ','
        << r.seed << ',' << FormatDouble(r.master_seconds) << ',' << FormatDouble(r.oracle_seconds)
        << ',' << FormatDouble(r.total_seconds) << ',' << r.iterations << ','
        << FormatDouble(r.objective) << ',' << Quote(r.metric_name) << ',' << FormatDouble(r.metric)
        << ',' << Quote(r.fingerprint) << ',' << Quote(r.status) << "\r\n";
  }
}

inline void WriteResultsCsv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(static_cast<bool>(out), ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  WriteResultsCsv(out, rows);
  out.flush();
  Require(static_cast<bool>(out), ErrorCode::kIoError, "write to '" + path + "' failed");
}

inline std::vector<ResultRow> ReadResultsCsv(std::istream& in) {
  using internal::ParseNumber;
  const auto records = internal::ParseCsv(in);
  Require(!records.empty(), ErrorCode::kParseError, "missing header");
  std::string header;
  for (std::size_t i = 0; i < records[0].size(); ++i) header += (i ? "," : "") + records[0][i];
  Require(header == kResultHeader, ErrorCode::kParseError, "unexpected header");
  std::vector<ResultRow> rows;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    const std::size_t line = i + 1;
    Require(f.size() == 17, ErrorCode::kParseError,
            "line " + std::to_string(line) + ": expected 17 fields");
    ResultRow r;
    r.experiment = f[0];
    r.family = f[1];
    r.population = ParseNumber<std::size_t>(f[2], line);
    r.size = ParseNumber<std::size_t>(f[3], line);
    r.sigma = ParseNumber<double>(f[4], line);
    r.mode = f[5];
    r.subset_size = ParseNumber<std::size_t>(f[6], line);
    r.seed = ParseNumber<std::uint64_t>(f[7], line);
    r.master_seconds = ParseNumber<double>(f[8], line);
    r.oracle_seconds = ParseNumber<double>(f[9], line);
    r.total_seconds = ParseNumber<double>(f[10], line);
    r.iterations = ParseNumber<std::size_t>(f[11], line);
    r.objective = ParseNumber<double>(f[12], line);
    r.metric_name = f[13];
    r.metric = ParseNumber<double>(f[14], line);
    r.fingerprint = f[15];
    r.status = f[16];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<ResultRow> ReadResultsCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  try {
    return ReadResultsCsv(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace scpkit::data
