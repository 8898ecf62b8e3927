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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddp {

// Base class for all domain errors thrown by this library.  Constructor
// argument validation uses std::invalid_argument instead, so callers can
// distinguish "you built the object wrong" from "the data/budget said no".
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A release was refused because it would push the discounted privacy loss
// over the budget.  The ledger is left untouched when this is thrown.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::uint64_t index, double attempted_sum, double epsilon,
                      const std::string& what)
      : Error(what),
        index_(index),
        attempted_sum_(attempted_sum),
        epsilon_(epsilon) {}

  std::uint64_t index() const { return index_; }
  double attempted_sum() const { return attempted_sum_; }
  double epsilon() const { return epsilon_; }

 private:
  std::uint64_t index_;
  double attempted_sum_;
  double epsilon_;
};

// A data value fell outside the declared [lo, hi] bounds.
class BoundsViolationError : public Error {
 public:
  using Error::Error;
};

// A column (or row) had the wrong length for the dataset it was given to.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

// Every entry of a column was missing while the query needed at least one.
class AllMissingError : public Error {
 public:
  using Error::Error;
};

// A 1-based time or row index referred outside the recorded range.
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.  Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Two raw readings shared the same (customer, timestamp) key.
class DuplicateReadingError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Relative error is undefined because the true answer is zero.
class ZeroMeanError : public Error {
 public:
  using Error::Error;
};

// A discounted sum was requested for a time earlier than a recorded release.
class CausalityError : public Error {
 public:
  using Error::Error;
};

// The requested configuration would under-report the query sensitivity
// (missing entries shrink the effective denominator of a mean).  Must be
// overridden explicitly by the caller.
class UnsoundSensitivityError : public Error {
 public:
  using Error::Error;
};

}  // namespace ddp
