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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddp/discount.hpp"
#include "ddp/errors.hpp"
#include "ddp/numeric.hpp"
#include "ddp/rng.hpp"
#include "ddp/schedule.hpp"

namespace ddp {

// One successful noisy release.
struct ReleaseRecord {
  std::uint64_t index;   // 1-based release time
  double true_value;     // exact query answer
  double noise_scale;    // Laplace scale used
  double report;         // true_value + Laplace noise
  double loss;           // privacy loss delta_f / noise_scale charged
};

/// Privacy-loss ledger for a stream of Laplace releases at times 1, 2, 3, ...
/// Each release at time k charges loss rho(k) = delta_f_k / b_k.  A release
/// at time t is admitted only if the discounted total
///
///   sum_{k=1}^{t} weight(t - k) * rho(k)  <=  epsilon (+ tolerance)
///
/// would still hold afterwards, where weight comes from the discount regime.
/// Refused releases draw no noise and leave the ledger untouched.  Skipped
/// time steps must be recorded explicitly (they charge zero loss) so indices
/// stay contiguous.
///
/// Under None/Exponential discounting the running total follows the O(1)
/// recurrence s_t = alpha * s_{t-1} + rho(t) (alpha = 1 for None), kept in
/// compensated arithmetic.  Hyperbolic weights admit no such recurrence, so
/// those totals are recomputed by direct O(t) summation.
class PrivacyLedger {
 public:
  PrivacyLedger(double epsilon, DiscountRegime regime)
      : epsilon_(epsilon), regime_(regime) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
      throw std::invalid_argument(
          "PrivacyLedger: epsilon must be finite and > 0, got " +
          std::to_string(epsilon));
    }
  }

  double epsilon() const { return epsilon_; }
  const DiscountRegime& regime() const { return regime_; }

  // Slack absorbing accumulated rounding in long budget sums.  Relative to
  // epsilon so rescaling the budget rescales the slack.
  double tolerance() const { return 1e-9 * epsilon_; }

  // Number of recorded time steps (releases + skips).  The next release must
  // use index frontier() + 1.
  std::uint64_t frontier() const { return losses_.size(); }

  std::span<const double> losses() const { return losses_; }

  // Discounted loss total as seen from time t (>= latest recorded index).
  // Recorded losses older than t keep decaying as t grows, so budget may
  // return even without new releases under discounting.
  double discounted_sum(std::uint64_t t) const {
    if (losses_.empty()) {
      return 0.0;
    }
    if (t < losses_.size()) {
      throw CausalityError(
          "PrivacyLedger::discounted_sum: t=" + std::to_string(t) +
          " precedes recorded release at index " +
          std::to_string(losses_.size()));
    }
    KahanAccumulator acc;
    for (std::size_t i = 0; i < losses_.size(); ++i) {
      acc.add(regime_.weight(t - (i + 1)) * losses_[i]);
    }
    return acc.value();
  }

  // Discounted total at the frontier itself; O(1) for None/Exponential.
  double current_sum() const {
    if (losses_.empty()) {
      return 0.0;
    }
    if (regime_.kind() == DiscountRegime::Kind::kHyperbolic) {
      return discounted_sum(losses_.size());
    }
    return running_.value();
  }

  // Whether a release charging rho at the next index would be admitted.
  bool can_record(double rho) const {
    return would_be_sum(rho) <= epsilon_ + tolerance();
  }

  // Records a loss at time k (must be frontier() + 1).  Throws
  // BudgetExceededError, leaving the ledger unchanged, if the discounted
  // total at k would exceed epsilon + tolerance.
  void record(std::uint64_t k, double rho) {
    if (k != losses_.size() + 1) {
      throw std::invalid_argument(
          "PrivacyLedger::record: expected contiguous index " +
          std::to_string(losses_.size() + 1) + ", got " + std::to_string(k));
    }
    if (!(rho >= 0.0) || !std::isfinite(rho)) {
      throw std::invalid_argument(
          "PrivacyLedger::record: loss must be finite and >= 0, got " +
          std::to_string(rho));
    }
    const double candidate = would_be_sum(rho);
    if (candidate > epsilon_ + tolerance()) {
      throw BudgetExceededError(
          k, candidate, epsilon_,
          "PrivacyLedger: release " + std::to_string(k) +
              " refused: discounted loss " + std::to_string(candidate) +
              " would exceed budget " + std::to_string(epsilon_));
    }
    commit(rho);
  }

  // Explicitly records "no release" at time k, charging zero loss.
  void skip(std::uint64_t k) { record(k, 0.0); }

  // Performs the k-th noisy release: charges delta_f_k / b_k against the
  // budget and, only if admitted, draws Laplace(b_k) noise.  Refusal throws
  // before the generator is touched.
  ReleaseRecord release(std::uint64_t k, double true_value, double delta_f_k,
                        const NoiseSchedule& schedule, SplitMix64& rng) {
    if (!(delta_f_k > 0.0) || !std::isfinite(delta_f_k)) {
      throw std::invalid_argument(
          "PrivacyLedger::release: delta_f must be finite and > 0, got " +
          std::to_string(delta_f_k));
    }
    if (!std::isfinite(true_value)) {
      throw std::invalid_argument(
          "PrivacyLedger::release: true_value must be finite");
    }
    const double scale = schedule.scale_at(k);
    record(k, delta_f_k / scale);
    const double noise = sample_laplace(rng, scale);
    return ReleaseRecord{k, true_value, scale, true_value + noise,
                         delta_f_k / scale};
  }

 private:
  // Discounted total at time n = frontier + 1 if rho were recorded there.
  double would_be_sum(double rho) const {
    switch (regime_.kind()) {
      case DiscountRegime::Kind::kNone:
        return running_.value() + rho;
      case DiscountRegime::Kind::kExponential:
        return regime_.alpha() * running_.value() + rho;
      case DiscountRegime::Kind::kHyperbolic: {
        KahanAccumulator acc;
        const std::uint64_t n = losses_.size() + 1;
        for (std::size_t i = 0; i < losses_.size(); ++i) {
          acc.add(regime_.weight(n - (i + 1)) * losses_[i]);
        }
        acc.add(rho);
        return acc.value();
      }
    }
    return rho;  // unreachable
  }

  void commit(double rho) {
    losses_.push_back(rho);
    switch (regime_.kind()) {
      case DiscountRegime::Kind::kNone:
        running_.add(rho);
        break;
      case DiscountRegime::Kind::kExponential:
        running_.scale(regime_.alpha());
        running_.add(rho);
        break;
      case DiscountRegime::Kind::kHyperbolic:
        break;  // recomputed on demand
    }
  }

  double epsilon_;
  DiscountRegime regime_;
  std::vector<double> losses_;
  KahanAccumulator running_;  // None/Exponential recurrence state
};

// Result of sweeping a schedule's discounted loss totals over a horizon.
struct ScheduleVerification {
  double max_sum;          // largest discounted total observed
  std::uint64_t argmax_t;  // time at which it occurred
  double margin;           // epsilon - max_sum (negative: budget violated)
  std::uint64_t horizon;   // times checked: 1..horizon
  double epsilon;          // budget the schedule was checked against

  // Same slack rule as the ledger: rounding-level overshoot is not a
  // violation.
  bool ok() const { return max_sum <= epsilon + 1e-9 * epsilon; }
};

// Discounted loss total sum_{k<=t} weight(t-k) * delta_f / b_k at a single t,
// by direct compensated summation.  Oracle-grade: no recurrences.
inline double discounted_loss_sum_at(const NoiseSchedule& schedule,
                                     const DiscountRegime& regime,
                                     double delta_f, std::uint64_t t) {
  if (t == 0) {
    throw std::invalid_argument("discounted_loss_sum_at: t is 1-based");
  }
  KahanAccumulator acc;
  for (std::uint64_t k = 1; k <= t; ++k) {
    acc.add(regime.weight(t - k) * (delta_f / schedule.scale_at(k)));
  }
  return acc.value();
}

/// Checks a schedule against a budget: computes the discounted loss total at
/// every t in 1..horizon and reports the worst case.  None/Exponential use
/// the exact recurrence (O(horizon)); hyperbolic weights depend on age, so
/// every prefix is resummed directly (O(horizon^2)).  Hyperbolic with beta=0
/// weighs everything by 1 and takes the recurrence path.
inline ScheduleVerification verify_schedule(const NoiseSchedule& schedule,
                                            const DiscountRegime& regime,
                                            double delta_f, double epsilon,
                                            std::uint64_t horizon) {
  if (horizon == 0) {
    throw std::invalid_argument("verify_schedule: horizon must be >= 1");
  }
  if (!(delta_f > 0.0) || !std::isfinite(delta_f)) {
    throw std::invalid_argument("verify_schedule: delta_f must be > 0");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("verify_schedule: epsilon must be > 0");
  }
  std::vector<double> losses(horizon);
  for (std::uint64_t k = 1; k <= horizon; ++k) {
    losses[k - 1] = delta_f / schedule.scale_at(k);
  }

  double max_sum = -std::numeric_limits<double>::infinity();
  std::uint64_t argmax_t = 0;
  const bool direct = regime.kind() == DiscountRegime::Kind::kHyperbolic &&
                      regime.beta() > 0.0;
  if (direct) {
    for (std::uint64_t t = 1; t <= horizon; ++t) {
      KahanAccumulator acc;
      for (std::uint64_t k = 1; k <= t; ++k) {
        acc.add(regime.weight(t - k) * losses[k - 1]);
      }
      if (acc.value() > max_sum) {
        max_sum = acc.value();
        argmax_t = t;
      }
    }
  } else {
    const double alpha = regime.kind() == DiscountRegime::Kind::kExponential
                             ? regime.alpha()
                             : 1.0;
    KahanAccumulator acc;
    for (std::uint64_t t = 1; t <= horizon; ++t) {
      acc.scale(alpha);
      acc.add(losses[t - 1]);
      if (acc.value() > max_sum) {
        max_sum = acc.value();
        argmax_t = t;
      }
    }
  }
  return ScheduleVerification{max_sum, argmax_t, epsilon - max_sum, horizon,
                              epsilon};
}

}  // namespace ddp
