#include "sagin/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sagin/geometry.hpp"

namespace sagin {

namespace {

// FNV-1a over the raw bytes of each draw.
class DrawHasher {
 public:
  void add(double v) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(v));
    for (unsigned char b : bytes) {
      h_ ^= b;
      h_ *= 0x100000001b3ULL;
    }
  }
  void add(const SlotDraws& d) {
    add(d.t_s);
    for (double g : d.gbs_fading) add(g);
    for (const auto& s : d.sat_user) add(s.power);
    for (double a : d.atg_smallscale) add(a);
    add(d.sat_uav.power);
  }
  void add(std::span<const Vec2> users) {
    for (const auto& u : users) {
      add(u.x);
      add(u.y);
    }
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

void accumulate(MeanMetrics& acc, const SlotMetrics& m) {
  acc.c_uav_sat_bps += m.c_uav_sat_bps;
  acc.c_gbs_bps += m.c_gbs_bps;
  acc.total_capacity_bps += m.total_capacity_bps;
  acc.p_total_w += m.p_total_w;
  acc.energy_eff_bps_per_w += m.energy_eff_bps_per_w;
  acc.n_gbs_served += m.n_gbs_served;
  acc.n_uav_served += m.n_uav_served;
  acc.n_sat_served += m.n_sat_served;
  acc.n_unserved += m.n_unserved;
}

void scale(MeanMetrics& m, double k) {
  m.c_uav_sat_bps *= k;
  m.c_gbs_bps *= k;
  m.total_capacity_bps *= k;
  m.p_total_w *= k;
  m.energy_eff_bps_per_w *= k;
  m.n_gbs_served *= k;
  m.n_uav_served *= k;
  m.n_sat_served *= k;
  m.n_unserved *= k;
}

}  // namespace

double ci95_quantile(std::size_t n) {
  // t_{0.975, df} for df = 1..29.
  static constexpr double kT[] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306,
                                  2.262,  2.228, 2.201, 2.179, 2.160, 2.145, 2.131, 2.120,
                                  2.110,  2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064,
                                  2.060,  2.056, 2.052, 2.048, 2.045};
  if (n < 2) return 0.0;
  if (n < 30) return kT[n - 2];
  return 1.959963984540054;
}

Estimate estimate(std::span<const double> samples) {
  Estimate e;
  const std::size_t n = samples.size();
  if (n == 0) return e;
  double sum = 0.0;
  for (double s : samples) sum += s;
  e.mean = sum / static_cast<double>(n);
  if (n < 2) return e;
  double ss = 0.0;
  for (double s : samples) ss += (s - e.mean) * (s - e.mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  e.ci95 = ci95_quantile(n) * sd / std::sqrt(static_cast<double>(n));
  return e;
}

std::vector<double> slot_times(const SystemConfig& config) {
  std::vector<double> t(static_cast<std::size_t>(config.n_slots));
  for (int k = 0; k < config.n_slots; ++k) {
    t[k] = config.t_s_s * static_cast<double>(k) / static_cast<double>(config.n_slots);
  }
  return t;
}

std::vector<TrialResult> run_trial(const SystemConfig& config,
                                   std::span<const FrameworkKind> frameworks,
                                   std::uint64_t trial_seed) {
  if (const auto v = validate(config); !v.empty()) {
    throw std::invalid_argument("invalid config: " + v.front().message());
  }
  Rng rng(trial_seed);
  SlotInput input;
  input.users = sample_users(config.n_users, {0.0, 0.0}, config.gbs_radius_m, rng);

  DrawHasher hasher;
  hasher.add(input.users);

  std::vector<TrialResult> results(frameworks.size());
  for (std::size_t f = 0; f < frameworks.size(); ++f) {
    results[f].trial_id = trial_seed;
    results[f].framework = frameworks[f];
    results[f].n_slots = config.n_slots;
  }

  for (double t : slot_times(config)) {
    input.draws = draw_slot(config.n_users, t, config, rng);
    hasher.add(input.draws);
    for (std::size_t f = 0; f < frameworks.size(); ++f) {
      const SlotOutcome o = evaluate_slot(frameworks[f], input, config);
      accumulate(results[f].metrics, o.metrics);
      results[f].constraint_violations += static_cast<int>(verify_constraints(o, config).size());
    }
  }
  for (auto& r : results) {
    scale(r.metrics, 1.0 / static_cast<double>(config.n_slots));
    r.draw_hash = hasher.value();
  }
  return results;
}

TrialResult run_trial(const SystemConfig& config, FrameworkKind framework,
                      std::uint64_t trial_seed) {
  const FrameworkKind one[] = {framework};
  return run_trial(config, one, trial_seed).front();
}

const FrameworkSummary& MonteCarloResult::at(FrameworkKind kind) const {
  for (const auto& f : frameworks) {
    if (f.framework == kind) return f;
  }
  throw std::out_of_range("framework not part of this run");
}

MonteCarloResult run_monte_carlo(const SystemConfig& config,
                                 std::span<const FrameworkKind> frameworks, std::size_t n_trials,
                                 std::uint64_t seed, const RunOptions& options) {
  if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
  if (const auto v = validate(config); !v.empty()) {
    throw std::invalid_argument("invalid config: " + v.front().message());
  }

  std::vector<std::vector<TrialResult>> per_trial(n_trials);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_trials) return;
      try {
        per_trial[i] = run_trial(config, frameworks, derive_seed(seed, i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n_trials;
        return;
      }
      const std::size_t d = done.fetch_add(1) + 1;
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(d, n_trials);
      }
    }
  };

  const int workers = std::max(1, std::min<int>(options.n_workers, static_cast<int>(n_trials)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  MonteCarloResult out;
  out.n_trials = n_trials;
  for (std::size_t f = 0; f < frameworks.size(); ++f) {
    FrameworkSummary s;
    s.framework = frameworks[f];
    s.trials.reserve(n_trials);
    std::vector<double> cap;
    std::vector<double> ee;
    cap.reserve(n_trials);
    ee.reserve(n_trials);
    for (std::size_t i = 0; i < n_trials; ++i) {
      s.trials.push_back(per_trial[i][f]);
      s.trials.back().trial_id = i;
      cap.push_back(per_trial[i][f].metrics.total_capacity_bps);
      ee.push_back(per_trial[i][f].metrics.energy_eff_bps_per_w);
    }
    s.capacity_bps = estimate(cap);
    s.ee_bps_per_w = estimate(ee);
    out.frameworks.push_back(std::move(s));
  }
  return out;
}

const SweepPoint& SweepResult::at(int users, FrameworkKind kind) const {
  for (const auto& p : points) {
    if (p.users == users && p.framework == kind) return p;
  }
  throw std::out_of_range("no sweep point for that user count and framework");
}

SweepResult sweep_users(const SystemConfig& config, std::span<const int> counts,
                        std::span<const FrameworkKind> frameworks, std::size_t n_trials,
                        std::uint64_t seed, const RunOptions& options,
                        std::vector<MonteCarloResult>* runs) {
  if (counts.empty()) throw std::invalid_argument("sweep needs at least one user count");
  if (frameworks.empty()) throw std::invalid_argument("sweep needs at least one framework");
  SweepResult out;
  out.user_counts.assign(counts.begin(), counts.end());
  out.frameworks.assign(frameworks.begin(), frameworks.end());
  out.n_trials = n_trials;
  for (int count : counts) {
    if (count < 0) throw std::invalid_argument("user counts must be >= 0");
    SystemConfig c = config;
    c.n_users = count;
    MonteCarloResult mc = run_monte_carlo(c, frameworks, n_trials, seed, options);
    for (const auto& f : mc.frameworks) {
      out.points.push_back({count, f.framework, f.capacity_bps, f.ee_bps_per_w});
    }
    if (runs != nullptr) runs->push_back(std::move(mc));
  }
  return out;
}

}  // namespace sagin
