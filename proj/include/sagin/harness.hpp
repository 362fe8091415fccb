#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sagin/cud.hpp"

namespace sagin {

/// Slot-averaged metrics of one trial.
struct MeanMetrics {
  double c_uav_sat_bps = 0.0;
  double c_gbs_bps = 0.0;
  double total_capacity_bps = 0.0;
  double p_total_w = 0.0;
  double energy_eff_bps_per_w = 0.0;
  double n_gbs_served = 0.0;
  double n_uav_served = 0.0;
  double n_sat_served = 0.0;
  double n_unserved = 0.0;

  bool operator==(const MeanMetrics&) const = default;
};

struct TrialResult {
  std::uint64_t trial_id = 0;
  FrameworkKind framework = FrameworkKind::kCud;
  MeanMetrics metrics;
  int n_slots = 0;
  int constraint_violations = 0;
  std::uint64_t draw_hash = 0;  // fingerprint of every stochastic draw the trial saw

  bool operator==(const TrialResult&) const = default;
};

/// Mean and 95% confidence half-width.
struct Estimate {
  double mean = 0.0;
  double ci95 = 0.0;
  bool operator==(const Estimate&) const = default;
};

/// Two-sided 97.5% quantile: Student t for n < 30, normal otherwise.
double ci95_quantile(std::size_t n);

/// Mean and CI half-width of a sample; half-width 0 for n = 1.
Estimate estimate(std::span<const double> samples);

/// Slot times spanning one orbital period.
std::vector<double> slot_times(const SystemConfig& config);

/// Evaluates every framework on one trial's shared draws (common random numbers).
std::vector<TrialResult> run_trial(const SystemConfig& config,
                                   std::span<const FrameworkKind> frameworks,
                                   std::uint64_t trial_seed);

TrialResult run_trial(const SystemConfig& config, FrameworkKind framework,
                      std::uint64_t trial_seed);

struct FrameworkSummary {
  FrameworkKind framework = FrameworkKind::kCud;
  Estimate capacity_bps;
  Estimate ee_bps_per_w;
  std::vector<TrialResult> trials;  // indexed by trial number
};

struct MonteCarloResult {
  std::vector<FrameworkSummary> frameworks;
  std::size_t n_trials = 0;
  const FrameworkSummary& at(FrameworkKind kind) const;
};

struct RunOptions {
  int n_workers = 1;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Trial i draws from derive_seed(seed, i). Results do not depend on
/// n_workers.
MonteCarloResult run_monte_carlo(const SystemConfig& config,
                                 std::span<const FrameworkKind> frameworks, std::size_t n_trials,
                                 std::uint64_t seed, const RunOptions& options = {});

struct SweepPoint {
  int users = 0;
  FrameworkKind framework = FrameworkKind::kCud;
  Estimate capacity_bps;
  Estimate ee_bps_per_w;
  bool operator==(const SweepPoint&) const = default;
};

struct SweepResult {
  std::vector<int> user_counts;
  std::vector<FrameworkKind> frameworks;
  std::vector<SweepPoint> points;  // count-major, frameworks in the given order
  std::size_t n_trials = 0;

  const SweepPoint& at(int users, FrameworkKind kind) const;
};

/// One Monte Carlo run per user count. When `runs` is given the per-count
/// MonteCarloResult (with per-trial data) is stored there.
SweepResult sweep_users(const SystemConfig& config, std::span<const int> counts,
                        std::span<const FrameworkKind> frameworks, std::size_t n_trials,
                        std::uint64_t seed, const RunOptions& options = {},
                        std::vector<MonteCarloResult>* runs = nullptr);

}  // namespace sagin
