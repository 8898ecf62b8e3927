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

#include <algorithm>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ddp/dataset.hpp"
#include "ddp/errors.hpp"
#include "ddp/ingest.hpp"

using Catch::Matchers::WithinRel;
using ddp::DailyAggregation;
using ddp::DailyTable;
using ddp::parse_civil_day;
using ddp::RawReading;
using ddp::ValueBounds;

namespace {
constexpr bool kFromString = false;
}

TEST_CASE("long csv parsing") {
  const std::string csv =
      "customer_id,timestamp,kwh\n"
      "h2,2012-07-01 00:30,1.5\n"
      "h1,2012-07-01 10:00,2.25\n"
      "h1,2012-07-01 23:59,0.5\n"
      "h1,2012-07-03 00:00,4\n";
  const auto readings = ddp::parse_long_csv(csv, kFromString);
  REQUIRE(readings.size() == 4);
  REQUIRE(readings[0].customer_id == "h2");
  REQUIRE(readings[0].kwh == 1.5);
  REQUIRE(readings[3].timestamp.day() == *parse_civil_day("2012-07-03"));
}

TEST_CASE("long csv error reporting") {
  REQUIRE_THROWS_AS(ddp::parse_long_csv("id,time,kwh\n", kFromString),
                    ddp::ParseError);
  REQUIRE_THROWS_AS(
      ddp::parse_long_csv("customer_id,timestamp,kwh\nh1,2012-07-01,1\n",
                          kFromString),
      ddp::ParseError);  // date without time of day
  REQUIRE_THROWS_AS(
      ddp::parse_long_csv("customer_id,timestamp,kwh\nh1,2012-07-01 10:00\n",
                          kFromString),
      ddp::ParseError);  // missing field
  REQUIRE_THROWS_AS(
      ddp::parse_long_csv(
          "customer_id,timestamp,kwh\nh1,2012-07-01 10:00,abc\n", kFromString),
      ddp::ParseError);
  REQUIRE_THROWS_AS(
      ddp::parse_long_csv(
          "customer_id,timestamp,kwh\nh1,2012-07-01 10:00,-1\n", kFromString),
      ddp::ParseError);  // negative energy
  REQUIRE_THROWS_AS(
      ddp::parse_long_csv(
          "customer_id,timestamp,kwh\n,2012-07-01 10:00,1\n", kFromString),
      ddp::ParseError);  // empty id

  try {
    ddp::parse_long_csv(
        "customer_id,timestamp,kwh\n"
        "h1,2012-07-01 10:00,1\n"
        "h1,2012-07-01 10:00,2\n",
        kFromString);
    FAIL("expected DuplicateReadingError");
  } catch (const ddp::DuplicateReadingError& e) {
    REQUIRE(e.line() == 3);
  }
}

TEST_CASE("wide csv parsing") {
  const std::string csv =
      "customer_id,2012-07-01T00:30,2012-07-01T01:00,2012-07-02T00:30\n"
      "h1,1.5,,2\n"
      "h2,0.25,0.75,\n";
  const auto readings = ddp::parse_wide_csv(csv, kFromString);
  REQUIRE(readings.size() == 4);  // empty cells are skipped
  REQUIRE(readings[0].customer_id == "h1");
  REQUIRE(readings[0].kwh == 1.5);
  REQUIRE(readings[1].kwh == 2.0);
  REQUIRE(readings[2].customer_id == "h2");
}

TEST_CASE("wide csv error reporting") {
  REQUIRE_THROWS_AS(ddp::parse_wide_csv("customer_id\nh1\n", kFromString),
                    ddp::ParseError);  // no timestamp columns
  REQUIRE_THROWS_AS(
      ddp::parse_wide_csv("customer_id,notatime\nh1,1\n", kFromString),
      ddp::ParseError);
  REQUIRE_THROWS_AS(
      ddp::parse_wide_csv(
          "customer_id,2012-07-01T00:30,2012-07-01T00:30\nh1,1,2\n",
          kFromString),
      ddp::ParseError);  // duplicate column
  REQUIRE_THROWS_AS(
      ddp::parse_wide_csv("customer_id,2012-07-01T00:30\nh1,1\nh1,2\n",
                          kFromString),
      ddp::DuplicateReadingError);
  REQUIRE_THROWS_AS(
      ddp::parse_wide_csv("customer_id,2012-07-01T00:30\nh1,1,9\n",
                          kFromString),
      ddp::ParseError);  // ragged row
}

TEST_CASE("daily resampling buckets by civil day") {
  const std::string csv =
      "customer_id,timestamp,kwh\n"
      "h2,2012-07-01 00:30,1.5\n"
      "h1,2012-07-01 10:00,2.25\n"
      "h1,2012-07-01 23:59,0.5\n"
      "h1,2012-07-03 00:00,4\n";
  const auto readings = ddp::parse_long_csv(csv, kFromString);

  const DailyTable sum = ddp::resample_daily(readings, DailyAggregation::kSum);
  REQUIRE(sum.customer_ids == std::vector<std::string>{"h1", "h2"});
  REQUIRE(sum.first_day == *parse_civil_day("2012-07-01"));
  REQUIRE(sum.days() == 3);  // contiguous range including the empty 07-02
  REQUIRE(sum.values[0][0] == 2.75);          // h1 on 07-01: 2.25 + 0.5
  REQUIRE(!sum.values[0][1].has_value());     // h1 on 07-02: nothing
  REQUIRE(sum.values[0][2] == 4.0);
  REQUIRE(sum.values[1][0] == 1.5);           // h2 on 07-01
  REQUIRE(!sum.values[1][1].has_value());
  REQUIRE(!sum.values[1][2].has_value());

  const DailyTable mean =
      ddp::resample_daily(readings, DailyAggregation::kMean);
  REQUIRE(mean.values[0][0] == 1.375);        // (2.25 + 0.5)/2
  REQUIRE(mean.values[1][0] == 1.5);

  REQUIRE_THROWS_AS(ddp::resample_daily({}, DailyAggregation::kSum),
                    std::invalid_argument);
}

TEST_CASE("readings on either side of midnight land in different days") {
  const std::string csv =
      "customer_id,timestamp,kwh\n"
      "h1,2012-07-01 23:59,1\n"
      "h1,2012-07-02 00:00,2\n";
  const auto table = ddp::resample_daily(
      ddp::parse_long_csv(csv, kFromString), DailyAggregation::kSum);
  REQUIRE(table.days() == 2);
  REQUIRE(table.values[0][0] == 1.0);
  REQUIRE(table.values[0][1] == 2.0);
}

TEST_CASE("daily table converts to an evolving dataset") {
  const std::string csv =
      "customer_id,timestamp,kwh\n"
      "h2,2012-07-01 00:30,1.5\n"
      "h1,2012-07-01 10:00,2.25\n"
      "h1,2012-07-03 00:00,4\n";
  const auto table = ddp::resample_daily(
      ddp::parse_long_csv(csv, kFromString), DailyAggregation::kSum);
  const auto dated = ddp::to_evolving_dataset(table, ValueBounds{0, 10});
  REQUIRE(dated.data.individuals() == 2);
  REQUIRE(dated.data.columns() == 3);
  REQUIRE(dated.customer_ids == std::vector<std::string>{"h1", "h2"});
  REQUIRE(dated.dates.front() == *parse_civil_day("2012-07-01"));
  REQUIRE(dated.dates.back() == *parse_civil_day("2012-07-03"));
  REQUIRE(dated.data.column(1)[0] == 2.25);
  REQUIRE(!dated.data.column(2)[0].has_value());

  // Out-of-bounds daily totals are refused.
  REQUIRE_THROWS_AS(ddp::to_evolving_dataset(table, ValueBounds{0, 2}),
                    ddp::BoundsViolationError);
}

TEST_CASE("date range can extend past the table") {
  const std::string csv =
      "customer_id,timestamp,kwh\n"
      "h1,2012-07-02 10:00,1\n";
  const auto table = ddp::resample_daily(
      ddp::parse_long_csv(csv, kFromString), DailyAggregation::kSum);
  const ddp::DateRange range{*parse_civil_day("2012-07-01"),
                             *parse_civil_day("2012-07-03")};
  const auto dated = ddp::to_evolving_dataset(table, ValueBounds{0, 10}, range);
  REQUIRE(dated.data.columns() == 3);
  REQUIRE(!dated.data.column(1)[0].has_value());
  REQUIRE(dated.data.column(2)[0] == 1.0);
  REQUIRE(!dated.data.column(3)[0].has_value());
}

TEST_CASE("daily table csv round trips exactly") {
  const std::string csv =
      "customer_id,timestamp,kwh\n"
      "h2,2012-07-01 00:30,1.5\n"
      "h1,2012-07-01 10:00,2.433330533215285\n"
      "h1,2012-07-03 00:00,0.1\n";
  const auto table = ddp::resample_daily(
      ddp::parse_long_csv(csv, kFromString), DailyAggregation::kSum);
  const std::string serialized = ddp::daily_csv_string(table);
  const DailyTable reread = ddp::read_daily_csv(serialized, kFromString);
  // Same bytes after a round trip: values, order and layout all survive.
  REQUIRE(ddp::daily_csv_string(reread) == serialized);
  REQUIRE(reread.values[0][0] == 2.433330533215285);
}

TEST_CASE("daily table csv error reporting") {
  REQUIRE_THROWS_AS(ddp::read_daily_csv("bogus header\n", kFromString),
                    ddp::ParseError);
  REQUIRE_THROWS_AS(ddp::read_daily_csv("customer_id,date,kwh\n", kFromString),
                    ddp::ParseError);  // no data
  REQUIRE_THROWS_AS(
      ddp::read_daily_csv("customer_id,date,kwh\nh1,2012-99-01,1\n",
                          kFromString),
      ddp::ParseError);
  REQUIRE_THROWS_AS(
      ddp::read_daily_csv("customer_id,date,kwh\nh1,2012-07-01,x\n",
                          kFromString),
      ddp::ParseError);
  REQUIRE_THROWS_AS(
      ddp::read_daily_csv(
          "customer_id,date,kwh\nh1,2012-07-01,1\nh1,2012-07-01,2\n",
          kFromString),
      ddp::DuplicateReadingError);
}

TEST_CASE("synthetic generation is deterministic per seed") {
  ddp::SyntheticConfig cfg;
  cfg.individuals = 10;
  cfg.days = 20;
  cfg.seed = 42;
  const auto a = ddp::gen_synthetic(cfg);
  const auto b = ddp::gen_synthetic(cfg);
  const auto start = *parse_civil_day("2012-07-01");
  REQUIRE(ddp::daily_csv_string(ddp::to_daily_table(a, start)) ==
          ddp::daily_csv_string(ddp::to_daily_table(b, start)));

  cfg.seed = 43;
  const auto c = ddp::gen_synthetic(cfg);
  REQUIRE(ddp::daily_csv_string(ddp::to_daily_table(a, start)) !=
          ddp::daily_csv_string(ddp::to_daily_table(c, start)));
}

TEST_CASE("constant-mean config yields identical columns") {
  ddp::SyntheticConfig cfg;
  cfg.individuals = 8;
  cfg.days = 15;
  cfg.seed = 5;
  cfg.seasonal_amplitude = 0.0;
  cfg.noise_sd = 0.0;
  const auto ds = ddp::gen_synthetic(cfg);
  const ddp::MeanQuery q{cfg.bounds, ddp::MissingPolicy::kExcludeFromMean};
  const double m1 = ddp::mean_at(ds, q, 1);
  for (std::size_t t = 1; t <= cfg.days; ++t) {
    REQUIRE(ds.column(t) == ds.column(1));
    REQUIRE(ddp::mean_at(ds, q, t) == m1);
  }
  // Offsets are +-15% of base load, so the mean sits near the base.
  REQUIRE_THAT(m1, WithinRel(cfg.base_load, 0.15));
}

TEST_CASE("synthetic values respect tight bounds via clipping") {
  ddp::SyntheticConfig cfg;
  cfg.individuals = 20;
  cfg.days = 30;
  cfg.seed = 7;
  cfg.bounds = ValueBounds{19.9, 20.1};  // forces clipping almost everywhere
  const auto ds = ddp::gen_synthetic(cfg);
  for (std::size_t t = 1; t <= cfg.days; ++t) {
    for (const auto& e : ds.column(t)) {
      REQUIRE(e.has_value());
      REQUIRE(*e >= 19.9);
      REQUIRE(*e <= 20.1);
    }
  }
}

TEST_CASE("generated ids are zero padded and sort in row order") {
  ddp::SyntheticConfig cfg;
  cfg.individuals = 12;
  cfg.days = 2;
  const auto table = ddp::to_daily_table(ddp::gen_synthetic(cfg),
                                         *parse_civil_day("2012-07-01"));
  REQUIRE(table.customer_ids.front() == "H01");
  REQUIRE(table.customer_ids.back() == "H12");
  REQUIRE(std::is_sorted(table.customer_ids.begin(), table.customer_ids.end()));
}

TEST_CASE("synthetic config validation") {
  ddp::SyntheticConfig cfg;
  cfg.individuals = 0;
  REQUIRE_THROWS_AS(ddp::gen_synthetic(cfg), std::invalid_argument);
  cfg.individuals = 5;
  cfg.days = 0;
  REQUIRE_THROWS_AS(ddp::gen_synthetic(cfg), std::invalid_argument);
  cfg.days = 5;
  cfg.noise_sd = -1.0;
  REQUIRE_THROWS_AS(ddp::gen_synthetic(cfg), std::invalid_argument);
}
