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

#include "ddp/dataset.hpp"
#include "ddp/dates.hpp"
#include "ddp/errors.hpp"
#include "ddp/ledger.hpp"
#include "ddp/numeric.hpp"
#include "ddp/rng.hpp"
#include "ddp/schedule.hpp"

namespace ddp {

namespace detail {
// Stream tags keeping release noise, Monte Carlo draws, and data generation
// statistically unrelated under a shared master seed.
inline constexpr std::uint64_t kReleaseStream = 0x5e1ea5e;
inline constexpr std::uint64_t kMonteCarloStream = 0x3ca51;
}  // namespace detail

// Expected relative error of a Laplace release with the given scale against
// a nonzero true answer: E|Laplace(b)| / |answer| = b / |answer|.
inline double analytic_expected_relative_error(double noise_scale,
                                               double true_mean) {
  if (!(noise_scale > 0.0) || !std::isfinite(noise_scale)) {
    throw std::invalid_argument(
        "analytic_expected_relative_error: noise_scale must be > 0");
  }
  if (true_mean == 0.0 || !std::isfinite(true_mean)) {
    throw ZeroMeanError(
        "analytic_expected_relative_error: relative error undefined for zero "
        "true mean");
  }
  return noise_scale / std::abs(true_mean);
}

// Monte Carlo estimate of the same quantity: mean of |noise| / |true mean|
// over `samples` fresh Laplace draws at the schedule's scale for time t.
// Deterministic in (seed, t).
inline double empirical_expected_relative_error(
    const EvolvingDataset& ds, const MeanQuery& q, std::size_t t,
    const NoiseSchedule& schedule, std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) {
    throw std::invalid_argument(
        "empirical_expected_relative_error: need samples >= 1");
  }
  const double mean = mean_at(ds, q, t);
  if (mean == 0.0) {
    throw ZeroMeanError(
        "empirical_expected_relative_error: relative error undefined for zero "
        "true mean at t=" + std::to_string(t));
  }
  const double scale = schedule.scale_at(t);
  SplitMix64 rng = derive_stream(seed, detail::kMonteCarloStream, t);
  KahanAccumulator acc;
  for (std::uint64_t s = 0; s < samples; ++s) {
    acc.add(std::abs(sample_laplace(rng, scale)));
  }
  return acc.value() / static_cast<double>(samples) / std::abs(mean);
}

struct ExperimentConfig {
  double epsilon = 1.0;
  double alpha = 0.5;   // exponential discount factor, in (0, 1)
  double beta = 1.0;    // hyperbolic discount rate, > 0
  std::uint64_t seed = 0;
  std::uint64_t monte_carlo_samples = 0;  // 0: analytic errors only
  bool allow_unsound_sensitivity = false;
};

// One released time step.  Error fields are NaN when undefined (zero true
// mean) or not requested (Monte Carlo disabled).
struct ErrorPoint {
  std::uint64_t t = 0;
  CivilDay date{0};
  double true_mean = 0.0;
  double noise_scale = 0.0;
  double report = 0.0;
  double analytic_rel_err = std::numeric_limits<double>::quiet_NaN();
  double empirical_rel_err = std::numeric_limits<double>::quiet_NaN();
};

struct ErrorSeries {
  std::string label;  // "dp", "exp", or "hyp"
  std::vector<ErrorPoint> points;
  std::uint64_t zero_mean_days = 0;  // days whose relative error was undefined
};

struct ExperimentResult {
  ErrorSeries dp;   // undiscounted budget, quadratic scales
  ErrorSeries exp;  // exponential discounting, constant scales
  ErrorSeries hyp;  // hyperbolic discounting, sqrt scales
};

// Releases the dataset's daily mean through all three regime/schedule pairs,
// once per column, each against its own ledger, and records per-day error
// metrics.  Every release is budget-checked; a refusal propagates as
// BudgetExceededError (the closed-form schedules are sized to never exhaust,
// so hitting one indicates a schedule/budget mismatch).  All noise is drawn
// from streams derived from cfg.seed, so results are reproducible.
inline ExperimentResult run_experiment(const EvolvingDataset& ds,
                                       std::span<const CivilDay> dates,
                                       const MeanQuery& q,
                                       const ExperimentConfig& cfg) {
  if (ds.columns() == 0) {
    throw std::invalid_argument("run_experiment: dataset has no columns");
  }
  if (!dates.empty() && dates.size() != ds.columns()) {
    throw LengthMismatchError("run_experiment: got " +
                              std::to_string(dates.size()) + " dates for " +
                              std::to_string(ds.columns()) + " columns");
  }
  if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon)) {
    throw std::invalid_argument("run_experiment: epsilon must be > 0");
  }
  if (q.missing_policy == MissingPolicy::kExcludeFromMean && ds.has_missing() &&
      !cfg.allow_unsound_sensitivity) {
    throw UnsoundSensitivityError(
        "run_experiment: dataset has missing entries and the query excludes "
        "them from the mean; the nominal sensitivity (hi-lo)/n understates "
        "the true sensitivity. Pass allow_unsound_sensitivity to proceed "
        "anyway, or use the treat-as-zero policy.");
  }

  const double delta_f = sensitivity_mean(q, ds.individuals());
  struct Arm {
    const char* label;
    DiscountRegime regime;
    NoiseSchedule schedule;
  };
  const Arm arms[3] = {
      {"dp", DiscountRegime::none(),
       NoiseSchedule::dp_quadratic(delta_f, cfg.epsilon)},
      {"exp", DiscountRegime::exponential(cfg.alpha),
       NoiseSchedule::exp_constant(delta_f, cfg.epsilon, cfg.alpha)},
      {"hyp", DiscountRegime::hyperbolic(cfg.beta),
       NoiseSchedule::hyp_sqrt(delta_f, cfg.epsilon, cfg.beta)},
  };

  ExperimentResult result;
  ErrorSeries* out[3] = {&result.dp, &result.exp, &result.hyp};
  for (std::size_t a = 0; a < 3; ++a) {
    const Arm& arm = arms[a];
    ErrorSeries& series = *out[a];
    series.label = arm.label;
    series.points.reserve(ds.columns());
    PrivacyLedger ledger(cfg.epsilon, arm.regime);
    SplitMix64 rng = derive_stream(cfg.seed, detail::kReleaseStream, a);
    for (std::uint64_t t = 1; t <= ds.columns(); ++t) {
      const double true_mean = mean_at(ds, q, t);
      const ReleaseRecord rec =
          ledger.release(t, true_mean, delta_f, arm.schedule, rng);
      ErrorPoint p;
      p.t = t;
      p.date = dates.empty() ? CivilDay{static_cast<std::int64_t>(t) - 1}
                             : dates[t - 1];
      p.true_mean = true_mean;
      p.noise_scale = rec.noise_scale;
      p.report = rec.report;
      if (true_mean == 0.0) {
        ++series.zero_mean_days;
      } else {
        p.analytic_rel_err =
            analytic_expected_relative_error(rec.noise_scale, true_mean);
        if (cfg.monte_carlo_samples > 0) {
          p.empirical_rel_err = empirical_expected_relative_error(
              ds, q, t, arm.schedule, cfg.monte_carlo_samples, cfg.seed);
        }
      }
      series.points.push_back(p);
    }
  }
  return result;
}

enum class DiscountFamily { kExponential, kHyperbolic };

struct SweepPoint {
  double parameter = 0.0;
  double avg_rel_err = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t excluded_days = 0;  // zero-mean days left out of the average
};

// Predicted accuracy as a function of the discount parameter: for each grid
// point, averages the analytic relative error of the matching closed-form
// schedule over the dataset's days.  No releases are made and no noise is
// drawn — this is schedule arithmetic only.  Zero-mean days are skipped and
// counted (or rejected when skip_zero_mean is false).
inline std::vector<SweepPoint> sweep_discount(
    const EvolvingDataset& ds, const MeanQuery& q, double epsilon,
    DiscountFamily family, std::span<const double> grid,
    bool skip_zero_mean = true) {
  if (ds.columns() == 0) {
    throw std::invalid_argument("sweep_discount: dataset has no columns");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("sweep_discount: epsilon must be > 0");
  }
  if (grid.empty()) {
    throw std::invalid_argument("sweep_discount: empty parameter grid");
  }
  const double delta_f = sensitivity_mean(q, ds.individuals());
  std::vector<double> means(ds.columns());
  for (std::size_t t = 1; t <= ds.columns(); ++t) {
    means[t - 1] = mean_at(ds, q, t);
    if (means[t - 1] == 0.0 && !skip_zero_mean) {
      throw ZeroMeanError("sweep_discount: zero true mean at t=" +
                          std::to_string(t));
    }
  }
  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (const double param : grid) {
    const NoiseSchedule schedule =
        family == DiscountFamily::kExponential
            ? NoiseSchedule::exp_constant(delta_f, epsilon, param)
            : NoiseSchedule::hyp_sqrt(delta_f, epsilon, param);
    SweepPoint p;
    p.parameter = param;
    KahanAccumulator acc;
    std::uint64_t included = 0;
    for (std::uint64_t t = 1; t <= ds.columns(); ++t) {
      if (means[t - 1] == 0.0) {
        ++p.excluded_days;
        continue;
      }
      acc.add(schedule.scale_at(t) / std::abs(means[t - 1]));
      ++included;
    }
    if (included > 0) {
      p.avg_rel_err = acc.value() / static_cast<double>(included);
    }
    points.push_back(p);
  }
  return points;
}

}  // namespace ddp
