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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddp {

/// How past privacy losses are discounted when the budget is checked at the
/// current time t.  A loss incurred at time k has age (delay) t - k and
/// contributes weight(t - k) * loss to the discounted total:
///
///   None              weight = 1                      (classic composition)
///   Exponential(a)    weight = a^delay,   a in (0, 1]
///   Hyperbolic(b)     weight = 1 / (1 + b * delay),   b >= 0
///
/// Exponential(1) and Hyperbolic(0) weigh every loss by exactly 1 and are
/// equivalent to None.
class DiscountRegime {
 public:
  enum class Kind { kNone, kExponential, kHyperbolic };

  static DiscountRegime none() { return DiscountRegime(Kind::kNone, 1.0); }

  static DiscountRegime exponential(double alpha) {
    if (!(alpha > 0.0) || !(alpha <= 1.0)) {
      throw std::invalid_argument(
          "DiscountRegime::exponential: alpha must be in (0, 1], got " +
          std::to_string(alpha));
    }
    return DiscountRegime(Kind::kExponential, alpha);
  }

  static DiscountRegime hyperbolic(double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
      throw std::invalid_argument(
          "DiscountRegime::hyperbolic: beta must be finite and >= 0, got " +
          std::to_string(beta));
    }
    return DiscountRegime(Kind::kHyperbolic, beta);
  }

  double weight(std::uint64_t delay) const {
    switch (kind_) {
      case Kind::kNone:
        return 1.0;
      case Kind::kExponential:
        return std::pow(param_, static_cast<double>(delay));
      case Kind::kHyperbolic:
        return 1.0 / (1.0 + param_ * static_cast<double>(delay));
    }
    return 1.0;  // unreachable
  }

  Kind kind() const { return kind_; }

  double alpha() const {
    if (kind_ != Kind::kExponential) {
      throw std::logic_error("DiscountRegime::alpha: not an exponential regime");
    }
    return param_;
  }

  double beta() const {
    if (kind_ != Kind::kHyperbolic) {
      throw std::logic_error("DiscountRegime::beta: not a hyperbolic regime");
    }
    return param_;
  }

  // True when every weight is exactly 1 and the regime degenerates to
  // undiscounted composition.
  bool reduces_to_undiscounted() const {
    switch (kind_) {
      case Kind::kNone:
        return true;
      case Kind::kExponential:
        return param_ == 1.0;
      case Kind::kHyperbolic:
        return param_ == 0.0;
    }
    return false;  // unreachable
  }

  const char* label() const {
    switch (kind_) {
      case Kind::kNone:
        return "none";
      case Kind::kExponential:
        return "exponential";
      case Kind::kHyperbolic:
        return "hyperbolic";
    }
    return "?";  // unreachable
  }

 private:
  DiscountRegime(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_;
};

}  // namespace ddp
