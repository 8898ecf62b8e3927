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
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ddp/errors.hpp"

namespace ddp {

/// Maps a 1-based release index k to the Laplace noise scale b_k used for
/// that release.  The closed-form families are sized so an infinite stream of
/// releases with per-step sensitivity delta_f stays within budget epsilon
/// under the matching discount regime:
///
///   quadratic   b_k = delta_f * pi^2 * k^2 / (6 * epsilon)
///               undiscounted; sum of delta_f/b_k is epsilon * 6/pi^2 * sum(1/k^2) -> epsilon
///   constant    b_k = delta_f / (epsilon * (1 - alpha))
///               exponential discounting with factor alpha in (0, 1)
///   sqrt        b_k = 2 * delta_f * (atanh(1/sqrt(3)) + atanh(sqrt(beta/(1+beta))))
///                     * sqrt(k) / (epsilon * sqrt(beta * (beta + 1)))
///               hyperbolic discounting with rate beta > 0
///   custom      caller-supplied positive scales, finite horizon
class NoiseSchedule {
 public:
  enum class Kind { kDpQuadratic, kExpConstant, kHypSqrt, kCustom };

  static NoiseSchedule dp_quadratic(double delta_f, double epsilon) {
    check_positive(delta_f, "dp_quadratic", "delta_f");
    check_positive(epsilon, "dp_quadratic", "epsilon");
    const double coeff =
        delta_f * std::numbers::pi * std::numbers::pi / (6.0 * epsilon);
    return NoiseSchedule(Kind::kDpQuadratic, coeff);
  }

  static NoiseSchedule exp_constant(double delta_f, double epsilon,
                                    double alpha) {
    check_positive(delta_f, "exp_constant", "delta_f");
    check_positive(epsilon, "exp_constant", "epsilon");
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
      throw std::invalid_argument(
          "NoiseSchedule::exp_constant: alpha must be in (0, 1), got " +
          std::to_string(alpha));
    }
    return NoiseSchedule(Kind::kExpConstant, delta_f / (epsilon * (1.0 - alpha)));
  }

  static NoiseSchedule hyp_sqrt(double delta_f, double epsilon, double beta) {
    check_positive(delta_f, "hyp_sqrt", "delta_f");
    check_positive(epsilon, "hyp_sqrt", "epsilon");
    if (!(beta > 0.0) || !std::isfinite(beta)) {
      throw std::invalid_argument(
          "NoiseSchedule::hyp_sqrt: beta must be finite and > 0, got " +
          std::to_string(beta));
    }
    const double coeff =
        2.0 * delta_f *
        (std::atanh(std::numbers::inv_sqrt3) +
         std::atanh(std::sqrt(beta / (1.0 + beta)))) /
        (epsilon * std::sqrt(beta * (beta + 1.0)));
    return NoiseSchedule(Kind::kHypSqrt, coeff);
  }

  static NoiseSchedule custom(std::vector<double> scales) {
    if (scales.empty()) {
      throw std::invalid_argument("NoiseSchedule::custom: empty scale list");
    }
    for (std::size_t i = 0; i < scales.size(); ++i) {
      if (!(scales[i] > 0.0) || !std::isfinite(scales[i])) {
        throw std::invalid_argument(
            "NoiseSchedule::custom: scale at index " + std::to_string(i + 1) +
            " must be finite and > 0, got " + std::to_string(scales[i]));
      }
    }
    NoiseSchedule s(Kind::kCustom, 0.0);
    s.scales_ = std::move(scales);
    return s;
  }

  // Noise scale for the k-th release, k >= 1.  Custom schedules have a finite
  // horizon; indexing past it is an error.
  double scale_at(std::uint64_t k) const {
    if (k == 0) {
      throw IndexOutOfRangeError("NoiseSchedule::scale_at: index is 1-based");
    }
    const double kd = static_cast<double>(k);
    switch (kind_) {
      case Kind::kDpQuadratic:
        return coeff_ * kd * kd;
      case Kind::kExpConstant:
        return coeff_;
      case Kind::kHypSqrt:
        return coeff_ * std::sqrt(kd);
      case Kind::kCustom:
        if (k > scales_.size()) {
          throw IndexOutOfRangeError(
              "NoiseSchedule::scale_at: index " + std::to_string(k) +
              " past custom horizon " + std::to_string(scales_.size()));
        }
        return scales_[k - 1];
    }
    return 0.0;  // unreachable
  }

  Kind kind() const { return kind_; }

  // Largest valid index; unbounded for the closed-form families.
  std::uint64_t max_index() const {
    return kind_ == Kind::kCustom ? scales_.size()
                                  : std::numeric_limits<std::uint64_t>::max();
  }

 private:
  NoiseSchedule(Kind kind, double coeff) : kind_(kind), coeff_(coeff) {}

  static void check_positive(double v, const char* fn, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("NoiseSchedule::") + fn + ": " +
                                  name + " must be finite and > 0, got " +
                                  std::to_string(v));
    }
  }

  Kind kind_;
  double coeff_;
  std::vector<double> scales_;  // kCustom only
};

}  // namespace ddp
