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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddp/errors.hpp"

namespace ddp {

// Closed value range [lo, hi] every entry must lie in.  This is public
// metadata (it feeds sensitivity), never data-dependent.
struct ValueBounds {
  double lo = 0.0;
  double hi = 1.0;
};

inline void validate_bounds(const ValueBounds& b) {
  if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || !(b.hi > b.lo)) {
    throw std::invalid_argument("ValueBounds: need finite lo < hi, got [" +
                                std::to_string(b.lo) + ", " +
                                std::to_string(b.hi) + "]");
  }
}

/// A fixed population of n individuals observed over a growing sequence of
/// time steps.  Column t (1-based) holds each individual's value at time t;
/// an entry may be missing.  Every present value must respect the declared
/// bounds — that is enforced at append time, so downstream sensitivity math
/// can trust the metadata.
class EvolvingDataset {
 public:
  using Entry = std::optional<double>;

  EvolvingDataset(std::size_t individuals, ValueBounds bounds)
      : individuals_(individuals), bounds_(bounds) {
    if (individuals == 0) {
      throw std::invalid_argument("EvolvingDataset: need at least 1 individual");
    }
    validate_bounds(bounds);
  }

  std::size_t individuals() const { return individuals_; }
  std::size_t columns() const { return columns_.size(); }
  ValueBounds bounds() const { return bounds_; }
  bool has_missing() const { return missing_count_ > 0; }
  std::size_t missing_count() const { return missing_count_; }

  void append_column(std::span<const Entry> column) {
    if (column.size() != individuals_) {
      throw LengthMismatchError(
          "EvolvingDataset::append_column: expected " +
          std::to_string(individuals_) + " entries, got " +
          std::to_string(column.size()));
    }
    for (std::size_t i = 0; i < column.size(); ++i) {
      if (!column[i]) {
        continue;
      }
      const double v = *column[i];
      if (!std::isfinite(v) || v < bounds_.lo || v > bounds_.hi) {
        throw BoundsViolationError(
            "EvolvingDataset::append_column: row " + std::to_string(i) +
            " value " + std::to_string(v) + " outside [" +
            std::to_string(bounds_.lo) + ", " + std::to_string(bounds_.hi) +
            "] at column " + std::to_string(columns_.size() + 1));
      }
    }
    for (const Entry& e : column) {
      if (!e) {
        ++missing_count_;
      }
    }
    columns_.emplace_back(column.begin(), column.end());
  }

  // Column at time t, 1-based.
  const std::vector<Entry>& column(std::size_t t) const {
    if (t == 0 || t > columns_.size()) {
      throw IndexOutOfRangeError("EvolvingDataset::column: t=" +
                                 std::to_string(t) + " outside 1.." +
                                 std::to_string(columns_.size()));
    }
    return columns_[t - 1];
  }

 private:
  std::size_t individuals_;
  ValueBounds bounds_;
  std::vector<std::vector<Entry>> columns_;
  std::size_t missing_count_ = 0;
};

// How a mean query treats missing entries.
//
// kExcludeFromMean averages the present entries only.  With missing data the
// effective denominator shrinks, so the nominal (hi-lo)/n sensitivity
// understates the true one — the query layer refuses that combination unless
// the caller overrides it explicitly.
//
// kTreatAsZero substitutes 0 for missing entries and always divides by n.
enum class MissingPolicy { kExcludeFromMean, kTreatAsZero };

struct MeanQuery {
  ValueBounds bounds;
  MissingPolicy missing_policy = MissingPolicy::kExcludeFromMean;
};

// Exact (non-private) mean at time t under the query's missing-data policy.
inline double mean_at(const EvolvingDataset& ds, const MeanQuery& q,
                      std::size_t t) {
  const auto& col = ds.column(t);
  double sum = 0.0;
  std::size_t present = 0;
  for (const auto& e : col) {
    if (e) {
      sum += *e;
      ++present;
    }
  }
  if (q.missing_policy == MissingPolicy::kExcludeFromMean) {
    if (present == 0) {
      throw AllMissingError("mean_at: every entry missing at t=" +
                            std::to_string(t));
    }
    return sum / static_cast<double>(present);
  }
  return sum / static_cast<double>(ds.individuals());
}

// Worst-case change of the mean when one individual's value changes
// arbitrarily within bounds.  With kTreatAsZero a single entry can also flip
// between 0 (missing) and any in-bounds value, so when 0 lies outside
// [lo, hi] the reachable per-entry change grows beyond hi - lo.
inline double sensitivity_mean(const MeanQuery& q, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("sensitivity_mean: need n >= 1");
  }
  validate_bounds(q.bounds);
  const double range = q.bounds.hi - q.bounds.lo;
  if (q.missing_policy == MissingPolicy::kTreatAsZero &&
      !(q.bounds.lo <= 0.0 && 0.0 <= q.bounds.hi)) {
    return std::max({std::abs(q.bounds.hi), std::abs(q.bounds.lo), range}) /
           static_cast<double>(n);
  }
  return range / static_cast<double>(n);
}

}  // namespace ddp
