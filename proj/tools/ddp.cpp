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
//
// ddp — command line front end for the discounted differential privacy
// release engine.
//
// Exit codes: 0 success, 1 usage/configuration error, 2 input parse error,
// 3 bounds violation, 4 budget refusal, 5 schedule verification failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddp/ddp.hpp"
#include "ddp/manifest.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBounds = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerifyFailed = 5;

// Thrown for CLI-level misuse discovered after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open config file '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

// Config-file values fill in options the command line left untouched.
template <typename T>
void apply_config(const json& cfg, const char* key, const CLI::Option* opt,
                  T& var) {
  if (opt != nullptr && opt->count() > 0) {
    return;  // explicit flag wins
  }
  if (!cfg.contains(key)) {
    return;
  }
  try {
    var = cfg.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config key '") + key + "': " + e.what());
  }
}

// Seed precedence: --seed flag, then config file, then DDP_SEED, then 0.
std::uint64_t resolve_seed(const CLI::Option* seed_opt, const json& cfg,
                           std::uint64_t flag_value) {
  if (seed_opt != nullptr && seed_opt->count() > 0) {
    return flag_value;
  }
  if (cfg.contains("seed")) {
    try {
      return cfg.at("seed").get<std::uint64_t>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("config key 'seed': ") + e.what());
    }
  }
  if (const char* env = std::getenv("DDP_SEED")) {
    const auto v = ddp::parse_uint(env);
    if (!v) {
      throw UsageError("DDP_SEED must be a nonnegative integer, got '" +
                       std::string(env) + "'");
    }
    return *v;
  }
  return flag_value;
}

ddp::ValueBounds parse_bounds(const std::vector<double>& v) {
  if (v.size() != 2) {
    throw UsageError("--bounds expects LO,HI");
  }
  ddp::ValueBounds b{v[0], v[1]};
  try {
    ddp::validate_bounds(b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return b;
}

ddp::MissingPolicy parse_policy(const std::string& s) {
  if (s == "exclude") {
    return ddp::MissingPolicy::kExcludeFromMean;
  }
  if (s == "zero") {
    return ddp::MissingPolicy::kTreatAsZero;
  }
  throw UsageError("--missing-policy must be 'exclude' or 'zero', got '" + s +
                   "'");
}

std::string series_csv(const ddp::ErrorSeries& series) {
  std::ostringstream out;
  out << "t,date,true_mean,noise_scale,report,analytic_rel_err,"
         "empirical_rel_err\n";
  for (const auto& p : series.points) {
    out << p.t << ',' << ddp::to_string(p.date) << ','
        << ddp::format_double_sig9(p.true_mean) << ','
        << ddp::format_double_sig9(p.noise_scale) << ','
        << ddp::format_double_sig9(p.report) << ',';
    if (std::isfinite(p.analytic_rel_err)) {
      out << ddp::format_double_sig9(p.analytic_rel_err);
    }
    out << ',';
    if (std::isfinite(p.empirical_rel_err)) {
      out << ddp::format_double_sig9(p.empirical_rel_err);
    }
    out << '\n';
  }
  return std::move(out).str();
}

ordered_json bounds_json(const ddp::ValueBounds& b) {
  return ordered_json::array({b.lo, b.hi});
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
  std::size_t n = 300;
  std::size_t days = 365;
  std::uint64_t seed = 0;
  double base_load = 20.0;
  double amplitude = 0.3;
  double noise_sd = 2.0;
  std::vector<double> bounds{0.0, 200.0};
  std::string start_date = "2012-07-01";
  std::string out;
  std::string config_path;
  const CLI::Option* seed_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* days_opt = nullptr;
  CLI::Option* base_opt = nullptr;
  CLI::Option* amp_opt = nullptr;
  CLI::Option* sd_opt = nullptr;
  CLI::Option* bounds_opt = nullptr;
  CLI::Option* start_opt = nullptr;
};

int cmd_gen(GenArgs& a) {
  json cfg = a.config_path.empty() ? json::object()
                                   : load_config_file(a.config_path);
  apply_config(cfg, "n", a.n_opt, a.n);
  apply_config(cfg, "days", a.days_opt, a.days);
  apply_config(cfg, "base_load", a.base_opt, a.base_load);
  apply_config(cfg, "amplitude", a.amp_opt, a.amplitude);
  apply_config(cfg, "noise_sd", a.sd_opt, a.noise_sd);
  apply_config(cfg, "bounds", a.bounds_opt, a.bounds);
  apply_config(cfg, "start_date", a.start_opt, a.start_date);
  a.seed = resolve_seed(a.seed_opt, cfg, a.seed);

  if (a.n == 0 || a.days == 0) {
    throw UsageError("--n and --days must be >= 1");
  }
  const auto start = ddp::parse_civil_day(a.start_date);
  if (!start) {
    throw UsageError("--start-date must be YYYY-MM-DD, got '" + a.start_date +
                     "'");
  }
  ddp::SyntheticConfig scfg;
  scfg.individuals = a.n;
  scfg.days = a.days;
  scfg.seed = a.seed;
  scfg.base_load = a.base_load;
  scfg.seasonal_amplitude = a.amplitude;
  scfg.noise_sd = a.noise_sd;
  scfg.bounds = parse_bounds(a.bounds);

  const ddp::EvolvingDataset ds = ddp::gen_synthetic(scfg);
  const ddp::DailyTable table = ddp::to_daily_table(ds, *start);
  ddp::write_file_atomic(a.out, ddp::daily_csv_string(table));

  ddp::RunManifest m;
  m.command = "gen";
  m.seed = a.seed;
  m.config = {{"n", a.n},
              {"days", a.days},
              {"base_load", a.base_load},
              {"amplitude", a.amplitude},
              {"noise_sd", a.noise_sd},
              {"bounds", bounds_json(scfg.bounds)},
              {"start_date", a.start_date}};
  m.outputs = {a.out};
  ddp::write_manifest(m, a.out + ".manifest.json");

  std::cout << "gen: wrote " << a.n << " customers x " << a.days
            << " days to " << a.out << " (seed " << a.seed << ")\n";
  return kExitOk;
}

// -------------------------------------------------------------- ingest ----

struct IngestArgs {
  std::string input;
  std::string format = "long";
  std::string agg = "sum";
  std::vector<double> bounds{0.0, 200.0};
  std::string out;
};

int cmd_ingest(IngestArgs& a) {
  std::vector<ddp::RawReading> readings;
  if (a.format == "long") {
    readings = ddp::parse_long_csv(a.input);
  } else if (a.format == "wide") {
    readings = ddp::parse_wide_csv(a.input);
  } else {
    throw UsageError("--format must be 'long' or 'wide', got '" + a.format +
                     "'");
  }
  if (readings.empty()) {
    throw ddp::ParseError("input '" + a.input + "' contains no readings");
  }
  ddp::DailyAggregation agg;
  if (a.agg == "sum") {
    agg = ddp::DailyAggregation::kSum;
  } else if (a.agg == "mean") {
    agg = ddp::DailyAggregation::kMean;
  } else {
    throw UsageError("--agg must be 'sum' or 'mean', got '" + a.agg + "'");
  }
  const ddp::ValueBounds bounds = parse_bounds(a.bounds);
  const ddp::DailyTable table = ddp::resample_daily(readings, agg);
  // Validates every daily value against the declared bounds before anything
  // is written.
  const ddp::DatedDataset dated = ddp::to_evolving_dataset(table, bounds);

  ddp::write_file_atomic(a.out, ddp::daily_csv_string(table));

  ddp::RunManifest m;
  m.command = "ingest";
  m.config = {{"input", a.input},
              {"format", a.format},
              {"agg", a.agg},
              {"bounds", bounds_json(bounds)}};
  m.inputs = {{a.input, ddp::sha256_hex_of_file(a.input)}};
  m.outputs = {a.out};
  ddp::write_manifest(m, a.out + ".manifest.json");

  std::cout << "ingest: " << readings.size() << " readings -> "
            << table.customer_ids.size() << " customers x " << table.days()
            << " days (" << dated.data.missing_count() << " missing cells), "
            << "wrote " << a.out << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- run ----

struct RunArgs {
  std::string data;
  std::string out_dir;
  double epsilon = 1.0;
  double alpha = 0.5;
  double beta = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t mc = 0;
  std::vector<double> bounds{0.0, 200.0};
  std::string policy = "exclude";
  bool allow_unsound = false;
  std::string config_path;
  const CLI::Option* seed_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* mc_opt = nullptr;
  CLI::Option* bounds_opt = nullptr;
  CLI::Option* policy_opt = nullptr;
  CLI::Option* allow_opt = nullptr;
};

int cmd_run(RunArgs& a) {
  json cfg = a.config_path.empty() ? json::object()
                                   : load_config_file(a.config_path);
  apply_config(cfg, "epsilon", a.eps_opt, a.epsilon);
  apply_config(cfg, "alpha", a.alpha_opt, a.alpha);
  apply_config(cfg, "beta", a.beta_opt, a.beta);
  apply_config(cfg, "mc", a.mc_opt, a.mc);
  apply_config(cfg, "bounds", a.bounds_opt, a.bounds);
  apply_config(cfg, "missing_policy", a.policy_opt, a.policy);
  apply_config(cfg, "allow_unsound_sensitivity", a.allow_opt, a.allow_unsound);
  a.seed = resolve_seed(a.seed_opt, cfg, a.seed);

  if (!(a.epsilon > 0.0)) {
    throw UsageError("--epsilon must be > 0");
  }
  const ddp::ValueBounds bounds = parse_bounds(a.bounds);
  const ddp::MeanQuery query{bounds, parse_policy(a.policy)};

  const ddp::DailyTable table = ddp::read_daily_csv(a.data);
  const ddp::DatedDataset dated = ddp::to_evolving_dataset(table, bounds);

  ddp::ExperimentConfig ecfg;
  ecfg.epsilon = a.epsilon;
  ecfg.alpha = a.alpha;
  ecfg.beta = a.beta;
  ecfg.seed = a.seed;
  ecfg.monte_carlo_samples = a.mc;
  ecfg.allow_unsound_sensitivity = a.allow_unsound;
  const ddp::ExperimentResult res =
      ddp::run_experiment(dated.data, dated.dates, query, ecfg);

  fs::create_directories(a.out_dir);
  const ddp::ErrorSeries* series[3] = {&res.dp, &res.exp, &res.hyp};
  ddp::RunManifest m;
  m.command = "run";
  m.seed = a.seed;
  m.config = {{"data", a.data},
              {"epsilon", a.epsilon},
              {"alpha", a.alpha},
              {"beta", a.beta},
              {"mc", a.mc},
              {"bounds", bounds_json(bounds)},
              {"missing_policy", a.policy},
              {"allow_unsound_sensitivity", a.allow_unsound},
              {"days", dated.data.columns()},
              {"customers", dated.data.individuals()}};
  m.inputs = {{a.data, ddp::sha256_hex_of_file(a.data)}};
  for (const auto* s : series) {
    const fs::path path = fs::path(a.out_dir) / ("errors_" + s->label + ".csv");
    ddp::write_file_atomic(path, series_csv(*s));
    m.outputs.push_back(path.string());
    m.config["zero_mean_days_" + s->label] = s->zero_mean_days;
  }
  ddp::write_manifest(m, fs::path(a.out_dir) / "manifest.json");

  for (const auto* s : series) {
    const auto& last = s->points.back();
    std::cout << "run[" << s->label << "]: " << s->points.size()
              << " releases, final noise scale "
              << ddp::format_double_sig9(last.noise_scale);
    if (s->zero_mean_days > 0) {
      std::cout << ", " << s->zero_mean_days << " zero-mean days";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- sweep ----

struct SweepArgs {
  std::string data;
  std::string out;
  std::string family;
  std::vector<double> grid;
  double epsilon = 1.0;
  std::vector<double> bounds{0.0, 200.0};
  std::string policy = "exclude";
  bool fail_on_zero_mean = false;
  std::string config_path;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* grid_opt = nullptr;
  CLI::Option* family_opt = nullptr;
  CLI::Option* bounds_opt = nullptr;
  CLI::Option* policy_opt = nullptr;
};

int cmd_sweep(SweepArgs& a) {
  json cfg = a.config_path.empty() ? json::object()
                                   : load_config_file(a.config_path);
  apply_config(cfg, "epsilon", a.eps_opt, a.epsilon);
  apply_config(cfg, "grid", a.grid_opt, a.grid);
  apply_config(cfg, "family", a.family_opt, a.family);
  apply_config(cfg, "bounds", a.bounds_opt, a.bounds);
  apply_config(cfg, "missing_policy", a.policy_opt, a.policy);

  if (!(a.epsilon > 0.0)) {
    throw UsageError("--epsilon must be > 0");
  }
  ddp::DiscountFamily family;
  if (a.family == "exp") {
    family = ddp::DiscountFamily::kExponential;
  } else if (a.family == "hyp") {
    family = ddp::DiscountFamily::kHyperbolic;
  } else {
    throw UsageError("--family must be 'exp' or 'hyp', got '" + a.family + "'");
  }
  if (a.grid.empty()) {
    throw UsageError("--grid must list at least one parameter value");
  }
  const ddp::ValueBounds bounds = parse_bounds(a.bounds);
  const ddp::MeanQuery query{bounds, parse_policy(a.policy)};

  const ddp::DailyTable table = ddp::read_daily_csv(a.data);
  const ddp::DatedDataset dated = ddp::to_evolving_dataset(table, bounds);

  const std::vector<ddp::SweepPoint> points = ddp::sweep_discount(
      dated.data, query, a.epsilon, family, a.grid, !a.fail_on_zero_mean);

  std::ostringstream csv;
  csv << "param,avg_rel_err,excluded_days\n";
  for (const auto& p : points) {
    csv << ddp::format_double_sig9(p.parameter) << ',';
    if (std::isfinite(p.avg_rel_err)) {
      csv << ddp::format_double_sig9(p.avg_rel_err);
    }
    csv << ',' << p.excluded_days << '\n';
  }
  ddp::write_file_atomic(a.out, std::move(csv).str());

  ddp::RunManifest m;
  m.command = "sweep";
  m.config = {{"data", a.data},
              {"epsilon", a.epsilon},
              {"family", a.family},
              {"grid", a.grid},
              {"bounds", bounds_json(bounds)},
              {"missing_policy", a.policy},
              {"fail_on_zero_mean", a.fail_on_zero_mean}};
  m.inputs = {{a.data, ddp::sha256_hex_of_file(a.data)}};
  m.outputs = {a.out};
  ddp::write_manifest(m, a.out + ".manifest.json");

  std::cout << "sweep[" << a.family << "]: " << points.size()
            << " grid points over " << dated.data.columns()
            << " days, wrote " << a.out << "\n";
  return kExitOk;
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
  std::string schedule;
  double delta_f = 1.0;
  double epsilon = 1.0;
  double alpha = 0.5;
  double beta = 1.0;
  std::uint64_t horizon = 100000;
  std::string scales_path;
};

std::vector<double> read_scales_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ddp::ParseError("cannot open scales file '" + path + "'");
  }
  std::vector<double> scales;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto v = ddp::parse_double(line);
    if (!v) {
      throw ddp::ParseError("bad noise scale '" + line + "'", lineno);
    }
    scales.push_back(*v);
  }
  if (scales.empty()) {
    throw ddp::ParseError("scales file '" + path + "' is empty");
  }
  return scales;
}

int cmd_verify(VerifyArgs& a) {
  ddp::DiscountRegime regime = ddp::DiscountRegime::none();
  std::optional<ddp::NoiseSchedule> schedule;
  if (a.schedule == "dp") {
    regime = ddp::DiscountRegime::none();
    if (a.scales_path.empty()) {
      schedule = ddp::NoiseSchedule::dp_quadratic(a.delta_f, a.epsilon);
    }
  } else if (a.schedule == "exp") {
    regime = ddp::DiscountRegime::exponential(a.alpha);
    if (a.scales_path.empty()) {
      schedule = ddp::NoiseSchedule::exp_constant(a.delta_f, a.epsilon, a.alpha);
    }
  } else if (a.schedule == "hyp") {
    regime = ddp::DiscountRegime::hyperbolic(a.beta);
    if (a.scales_path.empty()) {
      schedule = ddp::NoiseSchedule::hyp_sqrt(a.delta_f, a.epsilon, a.beta);
    }
  } else {
    throw UsageError("--schedule must be 'dp', 'exp' or 'hyp', got '" +
                     a.schedule + "'");
  }
  if (!a.scales_path.empty()) {
    schedule = ddp::NoiseSchedule::custom(read_scales_file(a.scales_path));
    if (a.horizon > schedule->max_index()) {
      throw UsageError("--horizon " + std::to_string(a.horizon) +
                       " exceeds the " +
                       std::to_string(schedule->max_index()) +
                       " scales provided");
    }
  }
  if (a.horizon == 0) {
    throw UsageError("--horizon must be >= 1");
  }

  const ddp::ScheduleVerification v = ddp::verify_schedule(
      *schedule, regime, a.delta_f, a.epsilon, a.horizon);

  std::cout << "schedule: " << a.schedule
            << (a.scales_path.empty() ? "" : " (custom scales)")
            << "  regime: " << regime.label() << "  horizon: " << a.horizon
            << "\n"
            << "max discounted loss: " << ddp::format_double_sig9(v.max_sum)
            << " at t=" << v.argmax_t << "\n"
            << "epsilon: " << ddp::format_double_sig9(a.epsilon)
            << "  margin: " << ddp::format_double_sig9(v.margin) << "\n";
  if (v.ok()) {
    std::cout << "OK: schedule stays within budget over the horizon\n";
    return kExitOk;
  }
  std::cout << "VIOLATION: discounted loss exceeds epsilon at t="
            << v.argmax_t << "\n";
  return kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ddp: streaming noisy means over evolving data with a discounted "
      "privacy-loss budget"};
  app.set_version_flag("--version", ddp::kVersion);
  app.require_subcommand(1);

  GenArgs gen;
  IngestArgs ingest;
  RunArgs run;
  SweepArgs sweep;
  VerifyArgs verify;
  std::function<int()> action;

  {
    CLI::App* c = app.add_subcommand(
        "gen", "Generate a synthetic daily smart-meter table");
    gen.n_opt = c->add_option("--n", gen.n, "Number of customers");
    gen.days_opt = c->add_option("--days", gen.days, "Number of days");
    gen.seed_opt = c->add_option("--seed", gen.seed, "Master RNG seed");
    gen.base_opt = c->add_option("--base-load", gen.base_load,
                                 "Mean daily load (kWh)");
    gen.amp_opt = c->add_option("--amplitude", gen.amplitude,
                                "Seasonal amplitude (fraction of base load)");
    gen.sd_opt = c->add_option("--noise-sd", gen.noise_sd,
                               "Per-cell Gaussian noise std dev");
    gen.bounds_opt = c->add_option("--bounds", gen.bounds,
                                   "Value bounds LO,HI")
                         ->delimiter(',');
    gen.start_opt = c->add_option("--start-date", gen.start_date,
                                  "First day (YYYY-MM-DD)");
    c->add_option("--out", gen.out, "Output daily-table CSV")->required();
    c->add_option("--config", gen.config_path, "JSON config file");
    c->callback([&] { action = [&] { return cmd_gen(gen); }; });
  }
  {
    CLI::App* c = app.add_subcommand(
        "ingest", "Normalize raw meter readings into a daily table");
    c->add_option("--input", ingest.input, "Raw readings CSV")->required();
    c->add_option("--format", ingest.format, "Input layout: long|wide");
    c->add_option("--agg", ingest.agg, "Daily aggregation: sum|mean");
    c->add_option("--bounds", ingest.bounds, "Value bounds LO,HI")
        ->delimiter(',');
    c->add_option("--out", ingest.out, "Output daily-table CSV")->required();
    c->callback([&] { action = [&] { return cmd_ingest(ingest); }; });
  }
  {
    CLI::App* c = app.add_subcommand(
        "run", "Release noisy daily means under all three budget regimes");
    c->add_option("--data", run.data, "Daily-table CSV")->required();
    c->add_option("--out", run.out_dir, "Output directory")->required();
    run.eps_opt = c->add_option("--epsilon", run.epsilon, "Privacy budget");
    run.alpha_opt = c->add_option("--alpha", run.alpha,
                                  "Exponential discount factor in (0,1)");
    run.beta_opt = c->add_option("--beta", run.beta,
                                 "Hyperbolic discount rate > 0");
    run.seed_opt = c->add_option("--seed", run.seed, "Master RNG seed");
    run.mc_opt = c->add_option("--mc", run.mc,
                               "Monte Carlo samples per day (0: analytic only)");
    run.bounds_opt = c->add_option("--bounds", run.bounds,
                                   "Value bounds LO,HI")
                         ->delimiter(',');
    run.policy_opt = c->add_option("--missing-policy", run.policy,
                                   "Missing entries: exclude|zero");
    run.allow_opt = c->add_flag(
        "--allow-unsound-sensitivity", run.allow_unsound,
        "Proceed although missing data makes (hi-lo)/n understate the true "
        "sensitivity");
    c->add_option("--config", run.config_path, "JSON config file");
    c->callback([&] { action = [&] { return cmd_run(run); }; });
  }
  {
    CLI::App* c = app.add_subcommand(
        "sweep", "Average analytic error across a discount parameter grid");
    c->add_option("--data", sweep.data, "Daily-table CSV")->required();
    c->add_option("--out", sweep.out, "Output CSV")->required();
    sweep.family_opt = c->add_option("--family", sweep.family,
                                     "Discount family: exp|hyp");
    sweep.grid_opt = c->add_option("--grid", sweep.grid,
                                   "Comma-separated parameter values")
                         ->delimiter(',');
    sweep.eps_opt = c->add_option("--epsilon", sweep.epsilon, "Privacy budget");
    sweep.bounds_opt = c->add_option("--bounds", sweep.bounds,
                                     "Value bounds LO,HI")
                           ->delimiter(',');
    sweep.policy_opt = c->add_option("--missing-policy", sweep.policy,
                                     "Missing entries: exclude|zero");
    c->add_flag("--fail-on-zero-mean", sweep.fail_on_zero_mean,
                "Error out instead of skipping zero-mean days");
    c->add_option("--config", sweep.config_path, "JSON config file");
    c->callback([&] { action = [&] { return cmd_sweep(sweep); }; });
  }
  {
    CLI::App* c = app.add_subcommand(
        "verify", "Check a noise schedule against the discounted budget");
    c->add_option("--schedule", verify.schedule,
                  "Schedule/regime family: dp|exp|hyp")
        ->required();
    c->add_option("--delta-f", verify.delta_f, "Per-step sensitivity");
    c->add_option("--epsilon", verify.epsilon, "Privacy budget");
    c->add_option("--alpha", verify.alpha, "Exponential discount factor");
    c->add_option("--beta", verify.beta, "Hyperbolic discount rate");
    c->add_option("--horizon", verify.horizon, "Times 1..horizon to check");
    c->add_option("--scales", verify.scales_path,
                  "File with one noise scale per line (custom schedule)");
    c->callback([&] { action = [&] { return cmd_verify(verify); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd =
      app.get_subcommands().empty() ? "ddp"
                                    : app.get_subcommands().front()->get_name();
  try {
    return action();
  } catch (const ddp::BudgetExceededError& e) {
    std::cerr << "ddp " << cmd << ": budget refusal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ddp::BoundsViolationError& e) {
    std::cerr << "ddp " << cmd << ": bounds violation: " << e.what() << "\n";
    return kExitBounds;
  } catch (const ddp::ParseError& e) {
    std::cerr << "ddp " << cmd << ": parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ddp::UnsoundSensitivityError& e) {
    std::cerr << "ddp " << cmd << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "ddp " << cmd << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ddp::Error& e) {
    std::cerr << "ddp " << cmd << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ddp " << cmd << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ddp " << cmd << ": error: " << e.what() << "\n";
    return kExitUsage;
  }
}
