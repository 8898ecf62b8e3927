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

#include <chrono>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace ddp {

// A calendar day, stored as days since 1970-01-01 (can be negative).
struct CivilDay {
  std::int64_t serial = 0;

  friend auto operator<=>(const CivilDay&, const CivilDay&) = default;
};

inline CivilDay add_days(CivilDay d, std::int64_t n) {
  return CivilDay{d.serial + n};
}

inline std::optional<CivilDay> make_civil_day(int year, unsigned month,
                                              unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year},
                                        std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) {
    return std::nullopt;
  }
  const std::chrono::sys_days sd{ymd};
  return CivilDay{sd.time_since_epoch().count()};
}

inline std::string to_string(CivilDay d) {
  const std::chrono::sys_days sd{std::chrono::days{d.serial}};
  const std::chrono::year_month_day ymd{sd};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

namespace detail {

inline bool parse_digits(std::string_view s, std::size_t pos, std::size_t count,
                         long& out) {
  long v = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') {
      return false;
    }
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace detail

// Strict "YYYY-MM-DD".  Rejects impossible dates (e.g. 2013-02-29).
inline std::optional<CivilDay> parse_civil_day(std::string_view s) {
  long y = 0, m = 0, d = 0;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      !detail::parse_digits(s, 0, 4, y) || !detail::parse_digits(s, 5, 2, m) ||
      !detail::parse_digits(s, 8, 2, d)) {
    return std::nullopt;
  }
  return make_civil_day(static_cast<int>(y), static_cast<unsigned>(m),
                        static_cast<unsigned>(d));
}

// A minute-resolution instant, stored as minutes since 1970-01-01 00:00.
struct Timestamp {
  std::int64_t minutes = 0;

  CivilDay day() const {
    // Floor division: negative instants still map to the right civil day.
    const std::int64_t q =
        minutes >= 0 ? minutes / 1440 : -((-minutes + 1439) / 1440);
    return CivilDay{q};
  }

  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

inline std::string to_string(Timestamp ts, char separator = ' ') {
  const std::int64_t day_minutes = ts.minutes - ts.day().serial * 1440;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%s%c%02d:%02d",
                to_string(ts.day()).c_str(), separator,
                static_cast<int>(day_minutes / 60),
                static_cast<int>(day_minutes % 60));
  return buf;
}

// Strict "YYYY-MM-DD HH:MM"; a 'T' separator is accepted as well.
inline std::optional<Timestamp> parse_timestamp(std::string_view s) {
  if (s.size() != 16 || (s[10] != ' ' && s[10] != 'T') || s[13] != ':') {
    return std::nullopt;
  }
  const auto day = parse_civil_day(s.substr(0, 10));
  long hh = 0, mm = 0;
  if (!day || !detail::parse_digits(s, 11, 2, hh) ||
      !detail::parse_digits(s, 14, 2, mm) || hh > 23 || mm > 59) {
    return std::nullopt;
  }
  return Timestamp{day->serial * 1440 + hh * 60 + mm};
}

}  // namespace ddp
