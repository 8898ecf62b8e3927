// Copyright 2026 The ddp Authors
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
#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ddp/errors.hpp"

namespace ddp {

// RFC 4180 CSV reader over an in-memory buffer.  Handles quoted fields,
// doubled quotes, and embedded separators/newlines; accepts LF or CRLF line
// endings.  Malformed quoting raises ParseError with the line the record
// started on.
class CsvReader {
 public:
  explicit CsvReader(std::string content) : buf_(std::move(content)) {}

  // Next record, or nullopt at end of input.  A trailing newline does not
  // produce an empty final record.
  std::optional<std::vector<std::string>> next_row() {
    if (pos_ >= buf_.size()) {
      return std::nullopt;
    }
    row_line_ = line_;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (;;) {
      if (pos_ >= buf_.size()) {
        if (quoted) {
          throw ParseError("unterminated quoted field", row_line_);
        }
        fields.push_back(std::move(field));
        return fields;
      }
      const char c = buf_[pos_];
      if (quoted) {
        if (c == '"') {
          if (pos_ + 1 < buf_.size() && buf_[pos_ + 1] == '"') {
            field.push_back('"');
            pos_ += 2;
          } else {
            quoted = false;
            ++pos_;
            if (pos_ < buf_.size() && buf_[pos_] != ',' &&
                buf_[pos_] != '\n' && buf_[pos_] != '\r') {
              throw ParseError("unexpected character after closing quote",
                               line_);
            }
          }
        } else {
          if (c == '\n') {
            ++line_;
          }
          field.push_back(c);
          ++pos_;
        }
      } else if (c == '"' && field.empty()) {
        quoted = true;
        ++pos_;
      } else if (c == '"') {
        throw ParseError("quote inside unquoted field", line_);
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
        ++pos_;
      } else if (c == '\n' || c == '\r') {
        if (c == '\r') {
          ++pos_;
          if (pos_ < buf_.size() && buf_[pos_] == '\n') {
            ++pos_;
          }
        } else {
          ++pos_;
        }
        ++line_;
        fields.push_back(std::move(field));
        return fields;
      } else {
        field.push_back(c);
        ++pos_;
      }
    }
  }

  // 1-based line on which the most recent record started.
  std::size_t row_line() const { return row_line_; }

 private:
  std::string buf_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t row_line_ = 1;
};

// Quotes a field only when needed (separator, quote, or newline present).
inline std::string csv_escape(std::string_view field) {
  const bool needs_quoting =
      field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quoting) {
    return std::string(field);
  }
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (const char c : field) {
    if (c == '"') {
      out.push_back('"');
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Shortest decimal string that round-trips exactly to the same double.  Used
// for data tables where re-reading must reproduce values bit for bit.
inline std::string format_double_exact(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Fixed 9 significant digits, the precision used in report CSVs.
inline std::string format_double_sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Full-field strict double parse; rejects trailing junk, empty, inf/nan.
inline std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    return std::nullopt;
  }
  return v;
}

}  // namespace ddp
