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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ddp/csv.hpp"
#include "ddp/dataset.hpp"
#include "ddp/dates.hpp"
#include "ddp/errors.hpp"
#include "ddp/rng.hpp"

namespace ddp {

// One raw meter reading: interval energy for (customer, instant).
struct RawReading {
  std::string customer_id;
  Timestamp timestamp;
  double kwh = 0.0;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

inline bool blank_row(const std::vector<std::string>& row) {
  return row.size() == 1 && row[0].empty();
}

inline void check_duplicate(std::set<std::pair<std::string, std::int64_t>>& seen,
                            const std::string& id, Timestamp ts,
                            std::size_t line) {
  if (!seen.emplace(id, ts.minutes).second) {
    throw DuplicateReadingError(
        "duplicate reading for customer '" + id + "' at " + to_string(ts),
        line);
  }
}

inline double parse_kwh(const std::string& field, std::size_t line) {
  const auto v = parse_double(field);
  if (!v) {
    throw ParseError("bad kwh value '" + field + "'", line);
  }
  if (*v < 0.0) {
    throw ParseError("negative kwh value '" + field + "'", line);
  }
  return *v;
}

}  // namespace detail

// Long format: header "customer_id,timestamp,kwh", one reading per row,
// timestamps as "YYYY-MM-DD HH:MM".  Duplicate (customer, timestamp) pairs
// are an error — silently folding them would corrupt daily totals.
inline std::vector<RawReading> parse_long_csv(const std::string& content_or_path,
                                              bool is_path = true) {
  CsvReader reader(is_path ? detail::read_file(content_or_path)
                           : content_or_path);
  auto header = reader.next_row();
  if (!header || *header != std::vector<std::string>{"customer_id", "timestamp",
                                                     "kwh"}) {
    throw ParseError("expected header 'customer_id,timestamp,kwh'", 1);
  }
  std::vector<RawReading> readings;
  std::set<std::pair<std::string, std::int64_t>> seen;
  while (auto row = reader.next_row()) {
    if (detail::blank_row(*row)) {
      continue;
    }
    const std::size_t line = reader.row_line();
    if (row->size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(row->size()),
                       line);
    }
    if ((*row)[0].empty()) {
      throw ParseError("empty customer_id", line);
    }
    const auto ts = parse_timestamp((*row)[1]);
    if (!ts) {
      throw ParseError("bad timestamp '" + (*row)[1] + "'", line);
    }
    detail::check_duplicate(seen, (*row)[0], *ts, line);
    readings.push_back({(*row)[0], *ts, detail::parse_kwh((*row)[2], line)});
  }
  return readings;
}

// Wide format: header "customer_id,<ts1>,<ts2>,..." with ISO timestamps
// ("YYYY-MM-DDTHH:MM"), one customer per row, empty cells meaning no reading.
inline std::vector<RawReading> parse_wide_csv(const std::string& content_or_path,
                                              bool is_path = true) {
  CsvReader reader(is_path ? detail::read_file(content_or_path)
                           : content_or_path);
  auto header = reader.next_row();
  if (!header || header->size() < 2 || (*header)[0] != "customer_id") {
    throw ParseError(
        "expected header 'customer_id,<timestamp>,...' with at least one "
        "timestamp column",
        1);
  }
  std::vector<Timestamp> slots;
  std::set<std::int64_t> slot_seen;
  for (std::size_t c = 1; c < header->size(); ++c) {
    const auto ts = parse_timestamp((*header)[c]);
    if (!ts) {
      throw ParseError("bad timestamp '" + (*header)[c] + "' in header column " +
                           std::to_string(c + 1),
                       1);
    }
    if (!slot_seen.insert(ts->minutes).second) {
      throw ParseError("duplicate timestamp column '" + (*header)[c] + "'", 1);
    }
    slots.push_back(*ts);
  }
  std::vector<RawReading> readings;
  std::set<std::string> customers;
  while (auto row = reader.next_row()) {
    if (detail::blank_row(*row)) {
      continue;
    }
    const std::size_t line = reader.row_line();
    if (row->size() != slots.size() + 1) {
      throw ParseError("expected " + std::to_string(slots.size() + 1) +
                           " fields, got " + std::to_string(row->size()),
                       line);
    }
    if ((*row)[0].empty()) {
      throw ParseError("empty customer_id", line);
    }
    if (!customers.insert((*row)[0]).second) {
      throw DuplicateReadingError(
          "duplicate row for customer '" + (*row)[0] + "'", line);
    }
    for (std::size_t c = 0; c < slots.size(); ++c) {
      const std::string& cell = (*row)[c + 1];
      if (cell.empty()) {
        continue;
      }
      readings.push_back({(*row)[0], slots[c], detail::parse_kwh(cell, line)});
    }
  }
  return readings;
}

enum class DailyAggregation { kSum, kMean };

// Per-customer daily values on a contiguous day range.  Rows are sorted by
// customer id; a nullopt cell means the customer had no reading that day.
struct DailyTable {
  std::vector<std::string> customer_ids;
  CivilDay first_day{0};
  std::vector<std::vector<std::optional<double>>> values;  // [customer][day]

  std::size_t days() const {
    return values.empty() ? 0 : values.front().size();
  }
  CivilDay day_at(std::size_t j) const {
    return add_days(first_day, static_cast<std::int64_t>(j));
  }
};

// Buckets readings into civil days and aggregates each (customer, day)
// bucket by sum (energy) or mean (average interval load).  The output covers
// the full contiguous range from the earliest to the latest observed day, so
// days where nobody reported still appear (as all-missing columns).
inline DailyTable resample_daily(std::span<const RawReading> readings,
                                 DailyAggregation agg) {
  if (readings.empty()) {
    throw std::invalid_argument("resample_daily: no readings");
  }
  std::int64_t lo = readings.front().timestamp.day().serial;
  std::int64_t hi = lo;
  std::set<std::string> ids;
  for (const auto& r : readings) {
    const std::int64_t d = r.timestamp.day().serial;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    ids.insert(r.customer_id);
  }

  DailyTable table;
  table.customer_ids.assign(ids.begin(), ids.end());
  table.first_day = CivilDay{lo};
  const std::size_t n_days = static_cast<std::size_t>(hi - lo + 1);
  table.values.assign(table.customer_ids.size(),
                      std::vector<std::optional<double>>(n_days));

  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < table.customer_ids.size(); ++i) {
    row_of[table.customer_ids[i]] = i;
  }
  std::vector<std::vector<std::uint32_t>> counts(
      table.customer_ids.size(), std::vector<std::uint32_t>(n_days, 0));
  for (const auto& r : readings) {
    const std::size_t i = row_of[r.customer_id];
    const std::size_t j =
        static_cast<std::size_t>(r.timestamp.day().serial - lo);
    auto& cell = table.values[i][j];
    cell = cell.value_or(0.0) + r.kwh;
    ++counts[i][j];
  }
  if (agg == DailyAggregation::kMean) {
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      for (std::size_t j = 0; j < n_days; ++j) {
        if (counts[i][j] > 0) {
          table.values[i][j] = *table.values[i][j] / counts[i][j];
        }
      }
    }
  }
  return table;
}

struct DateRange {
  CivilDay first;
  CivilDay last;  // inclusive
};

// Dataset plus the row/column labels it was built from.
struct DatedDataset {
  EvolvingDataset data;
  std::vector<std::string> customer_ids;
  std::vector<CivilDay> dates;
};

// Converts a daily table into an evolving dataset over a date range
// (defaults to the table's own range).  Each day becomes one column; days
// outside the table are all-missing.  Out-of-bounds values are rejected.
inline DatedDataset to_evolving_dataset(const DailyTable& table,
                                        ValueBounds bounds,
                                        std::optional<DateRange> range = {}) {
  if (table.customer_ids.empty() || table.days() == 0) {
    throw std::invalid_argument("to_evolving_dataset: empty table");
  }
  const DateRange r = range.value_or(
      DateRange{table.first_day, table.day_at(table.days() - 1)});
  if (r.last < r.first) {
    throw std::invalid_argument("to_evolving_dataset: empty date range");
  }
  DatedDataset out{EvolvingDataset(table.customer_ids.size(), bounds),
                   table.customer_ids,
                   {}};
  std::vector<EvolvingDataset::Entry> column(table.customer_ids.size());
  for (CivilDay d = r.first; d <= r.last; d = add_days(d, 1)) {
    const std::int64_t j = d.serial - table.first_day.serial;
    for (std::size_t i = 0; i < table.customer_ids.size(); ++i) {
      if (j < 0 || j >= static_cast<std::int64_t>(table.days())) {
        column[i] = std::nullopt;
      } else {
        const auto& cell = table.values[i][static_cast<std::size_t>(j)];
        if (cell && (!std::isfinite(*cell) || *cell < bounds.lo ||
                     *cell > bounds.hi)) {
          throw BoundsViolationError(
              "to_evolving_dataset: customer '" + table.customer_ids[i] +
              "' on " + to_string(d) + " has value " +
              format_double_exact(*cell) + " outside [" +
              format_double_exact(bounds.lo) + ", " +
              format_double_exact(bounds.hi) + "]");
        }
        column[i] = cell;
      }
    }
    out.data.append_column(column);
    out.dates.push_back(d);
  }
  return out;
}

// Normalized daily-table CSV: header "customer_id,date,kwh", one present cell
// per row, values printed with shortest round-trip precision so reading the
// file back reproduces every double exactly.  Missing cells are simply absent.
inline void write_daily_csv(const DailyTable& table, std::ostream& out) {
  out << "customer_id,date,kwh\n";
  for (std::size_t i = 0; i < table.customer_ids.size(); ++i) {
    for (std::size_t j = 0; j < table.days(); ++j) {
      const auto& cell = table.values[i][j];
      if (!cell) {
        continue;
      }
      out << csv_escape(table.customer_ids[i]) << ','
          << to_string(table.day_at(j)) << ',' << format_double_exact(*cell)
          << '\n';
    }
  }
}

inline std::string daily_csv_string(const DailyTable& table) {
  std::ostringstream ss;
  write_daily_csv(table, ss);
  return std::move(ss).str();
}

// Reads a normalized daily-table CSV back.  The day range is the contiguous
// span of the dates present.
inline DailyTable read_daily_csv(const std::string& content_or_path,
                                 bool is_path = true) {
  CsvReader reader(is_path ? detail::read_file(content_or_path)
                           : content_or_path);
  auto header = reader.next_row();
  if (!header ||
      *header != std::vector<std::string>{"customer_id", "date", "kwh"}) {
    throw ParseError("expected header 'customer_id,date,kwh'", 1);
  }
  struct Cell {
    std::string id;
    std::int64_t day;
    double kwh;
  };
  std::vector<Cell> cells;
  std::set<std::pair<std::string, std::int64_t>> seen;
  std::set<std::string> ids;
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  while (auto row = reader.next_row()) {
    if (detail::blank_row(*row)) {
      continue;
    }
    const std::size_t line = reader.row_line();
    if (row->size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(row->size()),
                       line);
    }
    if ((*row)[0].empty()) {
      throw ParseError("empty customer_id", line);
    }
    const auto day = parse_civil_day((*row)[1]);
    if (!day) {
      throw ParseError("bad date '" + (*row)[1] + "'", line);
    }
    if (!seen.emplace((*row)[0], day->serial).second) {
      throw DuplicateReadingError("duplicate cell for customer '" + (*row)[0] +
                                      "' on " + (*row)[1],
                                  line);
    }
    const auto v = parse_double((*row)[2]);
    if (!v || *v < 0.0) {
      throw ParseError("bad kwh value '" + (*row)[2] + "'", line);
    }
    ids.insert((*row)[0]);
    if (!any) {
      lo = hi = day->serial;
      any = true;
    } else {
      lo = std::min(lo, day->serial);
      hi = std::max(hi, day->serial);
    }
    cells.push_back({(*row)[0], day->serial, *v});
  }
  if (!any) {
    throw ParseError("daily table has no data rows");
  }
  DailyTable table;
  table.customer_ids.assign(ids.begin(), ids.end());
  table.first_day = CivilDay{lo};
  table.values.assign(
      table.customer_ids.size(),
      std::vector<std::optional<double>>(static_cast<std::size_t>(hi - lo + 1)));
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < table.customer_ids.size(); ++i) {
    row_of[table.customer_ids[i]] = i;
  }
  for (const auto& c : cells) {
    table.values[row_of[c.id]][static_cast<std::size_t>(c.day - lo)] = c.kwh;
  }
  return table;
}

// Synthetic household-load generator.  Day d of customer i:
//
//   value = base_load * (1 + seasonal_amplitude * sin(2*pi*d / 365))
//           + offset_i + noise
//
// clipped to bounds.  offset_i is a fixed per-customer level drawn uniformly
// from +-15% of base_load; noise is Gaussian(0, noise_sd), drawn fresh per
// cell.  Offsets and noise come from separate derived streams, so the same
// seed always produces the same table.  With seasonal_amplitude = 0 and
// noise_sd = 0 every column is identical (constant-mean series).
struct SyntheticConfig {
  std::size_t individuals = 300;
  std::size_t days = 365;
  std::uint64_t seed = 0;
  double base_load = 20.0;
  double seasonal_amplitude = 0.3;
  double noise_sd = 2.0;
  ValueBounds bounds{0.0, 200.0};
};

namespace detail {
inline constexpr std::uint64_t kOffsetStream = 0x0ff5;
inline constexpr std::uint64_t kNoiseStream = 0x4015e;
}  // namespace detail

inline EvolvingDataset gen_synthetic(const SyntheticConfig& cfg) {
  if (cfg.individuals == 0 || cfg.days == 0) {
    throw std::invalid_argument("gen_synthetic: need individuals, days >= 1");
  }
  validate_bounds(cfg.bounds);
  if (!std::isfinite(cfg.base_load) || !std::isfinite(cfg.seasonal_amplitude) ||
      !(cfg.noise_sd >= 0.0) || !std::isfinite(cfg.noise_sd)) {
    throw std::invalid_argument("gen_synthetic: bad load parameters");
  }
  EvolvingDataset ds(cfg.individuals, cfg.bounds);
  SplitMix64 offset_rng = derive_stream(cfg.seed, detail::kOffsetStream);
  std::vector<double> offset(cfg.individuals);
  for (auto& o : offset) {
    o = (uniform_unit(offset_rng) - 0.5) * 0.3 * cfg.base_load;
  }
  SplitMix64 noise_rng = derive_stream(cfg.seed, detail::kNoiseStream);
  std::vector<EvolvingDataset::Entry> column(cfg.individuals);
  for (std::size_t d = 1; d <= cfg.days; ++d) {
    const double seasonal =
        cfg.base_load *
        (1.0 + cfg.seasonal_amplitude *
                   std::sin(2.0 * std::numbers::pi * static_cast<double>(d) /
                            365.0));
    for (std::size_t i = 0; i < cfg.individuals; ++i) {
      double v = seasonal + offset[i];
      if (cfg.noise_sd > 0.0) {
        v += sample_normal(noise_rng, 0.0, cfg.noise_sd);
      }
      column[i] = std::clamp(v, cfg.bounds.lo, cfg.bounds.hi);
    }
    ds.append_column(column);
  }
  return ds;
}

// Wraps a fully-present dataset as a daily table starting at `start`, with
// zero-padded ids ("H001", ...) whose lexicographic order matches row order.
inline DailyTable to_daily_table(const EvolvingDataset& ds, CivilDay start,
                                 const std::string& id_prefix = "H") {
  DailyTable table;
  table.first_day = start;
  std::size_t width = 1;
  for (std::size_t n = ds.individuals(); n >= 10; n /= 10) {
    ++width;
  }
  table.customer_ids.reserve(ds.individuals());
  for (std::size_t i = 1; i <= ds.individuals(); ++i) {
    std::string num = std::to_string(i);
    table.customer_ids.push_back(
        id_prefix + std::string(width - num.size(), '0') + num);
  }
  table.values.assign(ds.individuals(),
                      std::vector<std::optional<double>>(ds.columns()));
  for (std::size_t t = 1; t <= ds.columns(); ++t) {
    const auto& col = ds.column(t);
    for (std::size_t i = 0; i < ds.individuals(); ++i) {
      table.values[i][t - 1] = col[i];
    }
  }
  return table;
}

}  // namespace ddp
