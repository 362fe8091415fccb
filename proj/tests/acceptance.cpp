// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "sagin/channel.hpp"
#include "sagin/combining.hpp"
#include "sagin/cud.hpp"
#include "sagin/geometry.hpp"
#include "sagin/harness.hpp"
#include "sagin/link.hpp"
#include "sagin/report.hpp"
#include "sagin/units.hpp"

using namespace sagin;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++g_failures;
  std::printf("%s  criterion %d  %-32s %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

cd cn(Rng& rng) {
  return {standard_normal(rng) / std::numbers::sqrt2, standard_normal(rng) / std::numbers::sqrt2};
}

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// ---------------------------------------------------------------------------

Outcome combining_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(derive_seed(1, 1));
  double worst_rel = 0.0;
  long beaten = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    DualHopChannel ch;
    ch.h0 = Eigen::VectorXcd::Constant(1, cn(rng));
    ch.h2 = Eigen::VectorXcd::Constant(1, cn(rng));
    ch.h1 = cn(rng);
    ch.gain_g = std::pow(10.0, -1.0 + 2.0 * uniform01(rng));
    ch.noise_psd_w_hz = std::pow(10.0, -1.0 + 2.0 * uniform01(rng));
    ch.bandwidth_hz = 1.0;
    const double p_sat = std::pow(10.0, -1.0 + 3.0 * uniform01(rng));
    const double p_relay = std::pow(10.0, -2.0 + 2.0 * uniform01(rng));
    const double s2 = ch.noise_power_w();

    const double closed = mrc_combined_snr(p_sat * std::norm(ch.h0(0)) / s2,
                                           p_sat * std::norm(ch.h1) / s2,
                                           p_relay * std::norm(ch.h2(0)) / s2,
                                           varsigma(p_relay, s2, ch.gain_g));
    const auto eq = build_equivalent(ch);
    const Eigen::VectorXcd w = optimal_weights(eq.h, eq.rn);
    const double at_opt = combiner_snr(w, eq.h, eq.rn, p_sat);
    worst_rel = std::max(worst_rel, std::abs(at_opt - closed) / closed);

    // Rayleigh quotient at random weights.
    const Eigen::Vector2cd h = eq.h;
    const Eigen::Matrix2cd rn = eq.rn;
    for (int k = 0; k < 10000; ++k) {
      const Eigen::Vector2cd v(cn(rng), cn(rng));
      const double q = p_sat * std::norm(v.dot(h)) / (v.adjoint() * rn * v)(0, 0).real();
      if (q > at_opt * (1.0 + 1e-12)) ++beaten;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst_rel <= 1e-6 && beaten == 0 && secs < 10.0,
          fmt("max rel err %.2e (tol 1e-6), random weights beating optimum %ld of 1e7", worst_rel,
              beaten)};
}

// One shared-draw realisation of a cooperative candidate in a visible slot.
RelayLinkBudget realisation(const SystemConfig& c, Rng& rng) {
  const auto sat = make_satellite(c);
  const auto orbit = make_orbit(c);
  const double w = visibility_half_width(orbit);
  const double phase = (2.0 * uniform01(rng) - 1.0) * w * 0.999;
  const double t = (phase + sat.phase_rad) / kTwoPi * sat.period_s;
  const double d_sat = satellite_distance(t, sat, orbit);
  const auto pos = sample_users(1, {0, 0}, c.r_uav_m, rng).front();
  const Vec3 uav{0, 0, c.h_uav_m};
  const auto user_fading = sample_shadowed_rician(c.srf, rng);
  const auto uav_fading = sample_shadowed_rician(c.srf, rng);
  const double small = sample_atg_smallscale(c, rng);
  const double n0 = noise_psd_w_per_hz(c);

  RelayLinkBudget b;
  b.p_sat_w = p_sat_w(c);
  b.bandwidth_hz = c.bandwidth_hz;
  b.noise_psd_w_hz = n0;
  b.gamma_is = snr_sat_link(1, b.p_sat_w, sat_channel_gain(d_sat, c.alpha_sat, user_fading),
                            c.bandwidth_hz, n0);
  b.gamma_js = snr_sat_link(1, b.p_sat_w, sat_channel_gain(d_sat, c.alpha_sat, uav_fading),
                            c.bandwidth_hz, n0);
  b.atg_gain = atg_link_gain(slant_distance(pos, uav), elevation_angle(pos, uav), small, c).gain;
  b.mean_h1_power = (c.srf.omega_direct + 2.0 * c.srf.b_scatter) * std::pow(d_sat, -c.alpha_sat);
  return b;
}

Outcome mrc_dominance() {
  long violations = 0;
  long relay_active = 0;
  std::string parts;
  for (bool literal_atg : {true, false}) {
    auto c = load_defaults();
    c.atg_extra_free_space = literal_atg;
    Rng rng(derive_seed(2, literal_atg ? 1 : 2));
    const double overhead =
        hover_power(c.h_uav_m, c.hover_p0_w, c.hover_delta, c.hover_eps_per_m) + p_gbs_w(c);
    long local = 0;
    for (int i = 0; i < 100000; ++i) {
      const auto b = realisation(c, rng);
      const auto pm = optimize_power(b, c, Combiner::kMrc, c.power_objective, overhead);
      const auto pe = optimize_power(b, c, Combiner::kEgc, c.power_objective, overhead);
      const double mrc = cooperative_snr(b, pm.p_w, c, Combiner::kMrc);
      const double egc = cooperative_snr(b, pe.p_w, c, Combiner::kEgc);
      if (mrc < egc * (1.0 - 1e-12)) ++local;
      if (mrc > b.gamma_is * (1.0 + 1e-6)) ++relay_active;
    }
    violations += local;
    parts += fmt("%s%s ATG gain: %ld violations", parts.empty() ? "" : "; ",
                 literal_atg ? "explicit free-space" : "path-loss-only", local);
  }
  return {violations == 0,
          fmt("%s (2 x 1e5 realisations, %ld with an active relay branch)", parts.c_str(),
              relay_active)};
}

struct SweepCache {
  SweepResult serial;
  SweepResult parallel;
  SweepResult parallel_again;
  double parallel_secs = 0.0;
};

SweepCache& ordering_sweeps() {
  static SweepCache cache = [] {
    SweepCache s;
    const auto c = load_defaults();
    const int counts[] = {120, 160, 200};
    RunOptions par;
    par.n_workers = std::max(8, workers());
    const auto t0 = std::chrono::steady_clock::now();
    s.parallel = sweep_users(c, counts, kAllFrameworks, 1000, 7, par);
    s.parallel_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
  }();
  return cache;
}

Outcome framework_ordering() {
  const auto& cache = ordering_sweeps();
  const auto& r = cache.parallel;
  const FrameworkKind order[] = {FrameworkKind::kCud, FrameworkKind::kEgcSagin,
                                 FrameworkKind::kLeoGbs, FrameworkKind::kGbsOnly};
  int reversals = 0;
  int separated = 0;
  int tied = 0;
  std::string worst;
  double worst_ratio = -1e300;
  auto check_pair = [&](int count, FrameworkKind hi, FrameworkKind lo, bool capacity) {
    const auto& a = capacity ? r.at(count, hi).capacity_bps : r.at(count, hi).ee_bps_per_w;
    const auto& b = capacity ? r.at(count, lo).capacity_bps : r.at(count, lo).ee_bps_per_w;
    const double gap = a.mean - b.mean;
    const double half = std::max(a.ci95, b.ci95);
    if (gap > half) {
      ++separated;
    } else if (gap >= -half) {
      ++tied;
    } else {
      ++reversals;
    }
    const double ratio = half > 0 ? -gap / half : (gap < 0 ? 1e300 : -1e300);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = fmt("%s %s-%s @%d", capacity ? "cap" : "ee", framework_id(hi), framework_id(lo),
                  count);
    }
  };
  for (int count : {120, 160, 200}) {
    for (int k = 0; k + 1 < 4; ++k) check_pair(count, order[k], order[k + 1], true);
    for (int k = 1; k < 4; ++k) check_pair(count, FrameworkKind::kCud, order[k], false);
  }
  return {reversals == 0 && cache.parallel_secs < 60.0,
          fmt("%d separated, %d within CI, %d reversed beyond CI; tightest %s at %.2f CI; "
              "sweep %.1f s (limit 60 s)",
              separated, tied, reversals, worst.c_str(), worst_ratio, cache.parallel_secs)};
}

Outcome no_excess() {
  const auto c = load_defaults();
  const int counts[] = {100};
  RunOptions opt;
  opt.n_workers = workers();
  const auto r = sweep_users(c, counts, kAllFrameworks, 1000, 7, opt);
  double worst = 0.0;
  bool ok = true;
  for (auto a : kAllFrameworks) {
    for (auto b : kAllFrameworks) {
      for (bool cap : {true, false}) {
        const auto& ea = cap ? r.at(100, a).capacity_bps : r.at(100, a).ee_bps_per_w;
        const auto& eb = cap ? r.at(100, b).capacity_bps : r.at(100, b).ee_bps_per_w;
        const double gap = std::abs(ea.mean - eb.mean);
        worst = std::max(worst, gap);
        if (gap > std::max(ea.ci95, eb.ci95)) ok = false;
      }
    }
  }
  return {ok, fmt("largest pairwise gap %.3g (capacity CI %.3g)", worst,
                  r.at(100, FrameworkKind::kCud).capacity_bps.ci95)};
}

Outcome analytic_identities() {
  const auto c = load_defaults();
  Rng rng(derive_seed(5, 0));
  double pl_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double theta = uniform01(rng) * std::numbers::pi / 2;
    const double d = 1.0 + uniform01(rng) * 5000.0;
    const double p = los_probability(theta, c.a_env, c.b_env);
    const double weighted = p * pathloss_db(d, c.f_c_hz, c.eta_los_db) +
                            (1.0 - p) * pathloss_db(d, c.f_c_hz, c.eta_nlos_db);
    pl_err = std::max(pl_err, std::abs(avg_pathloss_db(theta, d, c) - weighted));
  }
  double hover_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double h = uniform01(rng) * 1000.0;
    const double p = hover_power(h, c.hover_p0_w, c.hover_delta, c.hover_eps_per_m);
    hover_err = std::max(
        hover_err, std::abs(hover_altitude(p, c.hover_p0_w, c.hover_delta, c.hover_eps_per_m) - h));
  }
  double inv_err = 0.0;
  const double n0 = noise_psd_w_per_hz(c);
  for (int i = 0; i < 1000; ++i) {
    const double gamma = std::pow(10.0, -2.0 + 5.0 * uniform01(rng));
    const double gain = std::pow(10.0, -2.0 - 8.0 * uniform01(rng));
    const double pm = *min_power_for_threshold(gamma, gain, c.bandwidth_hz, n0);
    inv_err = std::max(inv_err,
                       std::abs(snr_uav_user(pm, gain, c.bandwidth_hz, n0) / gamma - 1.0));
  }
  long rate_mismatch = 0;
  for (int i = 0; i < 1000; ++i) {
    const double b = uniform01(rng) * 1e8;
    const double g = uniform01(rng) * 1e5;
    if (rate_cooperative(b, g, 1) != rate_gbs(b, g, 1) / 2.0) ++rate_mismatch;
  }
  return {pl_err <= 1e-9 && hover_err <= 1e-9 && inv_err <= 1e-12 && rate_mismatch == 0,
          fmt("avg PL %.1e dB, hover round trip %.1e m, min-power %.1e rel, half-duplex "
              "mismatches %ld",
              pl_err, hover_err, inv_err, rate_mismatch)};
}

Outcome distributions() {
  const auto c = load_defaults();
  Rng rng(derive_seed(6, 0));
  const int n = 1000000;
  double srf = 0.0;
  for (int i = 0; i < n; ++i) srf += sample_shadowed_rician(c.srf, rng).power;
  srf /= n;
  const double srf_rel = std::abs(srf / (c.srf.omega_direct + 2.0 * c.srf.b_scatter) - 1.0);
  double ray = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = sample_rayleigh(rng);
    ray += g * g;
  }
  ray /= n;
  const int m = 100000;
  auto pts = sample_users(m, {0, 0}, c.gbs_radius_m, rng);
  std::vector<double> r(m);
  for (int i = 0; i < m; ++i) r[i] = std::hypot(pts[i].x, pts[i].y) / c.gbs_radius_m;
  std::sort(r.begin(), r.end());
  double ks = 0.0;
  for (int i = 0; i < m; ++i) {
    const double f = r[i] * r[i];
    ks = std::max({ks, std::abs(f - static_cast<double>(i) / m),
                   std::abs(f - static_cast<double>(i + 1) / m)});
  }
  return {srf_rel < 0.01 && std::abs(ray - 1.0) < 0.01 && ks < 0.01,
          fmt("SR mean power %.4f (rel err %.2e), Rayleigh E[g^2] %.4f, disk KS %.4f", srf,
              srf_rel, ray, ks)};
}

Outcome constraint_audit() {
  long clean_violations = 0;
  long deployed = 0;
  for (bool literal_atg : {true, false}) {
    auto c = load_defaults();
    c.atg_extra_free_space = literal_atg;
    Rng rng(derive_seed(7, literal_atg ? 1 : 2));
    const auto times = slot_times(c);
    for (int s = 0; s < 10000; ++s) {
      // Mostly visible slots so the cooperative tier is exercised.
      const double t = (s % 4 == 3) ? times[rng() % times.size()] : 0.0;
      const auto in = make_slot_input(c, t, rng);
      const auto o = run_cud_slot(in, c);
      clean_violations += static_cast<long>(verify_constraints(o, c).size());
      deployed += o.uav.deployed;
    }
  }

  // Fault injection on a slot with an active relay.
  auto c = load_defaults();
  c.atg_extra_free_space = false;
  Rng rng(derive_seed(7, 3));
  SlotOutcome base;
  for (;;) {
    base = run_cud_slot(make_slot_input(c, 0.0, rng), c);
    if (base.uav.deployed) break;
  }
  auto has = [](const std::vector<std::string>& v, const char* tag) {
    return std::any_of(v.begin(), v.end(), [&](const auto& s) { return s.rfind(tag, 0) == 0; });
  };
  auto coop_user = [](const SlotOutcome& o) {
    for (std::size_t i = 0; i < o.users.size(); ++i) {
      if (o.decisions[i].delta_uav == 1) return i;
    }
    return o.users.size();
  };
  int detected = 0;
  {
    auto o = base;
    o.users[coop_user(o)].p_relay_w = 2.0 * p_max_w(c);
    detected += has(verify_constraints(o, c), "C1");
  }
  {
    auto o = base;
    o.omega_j_effective = 0;
    detected += has(verify_constraints(o, c), "C2");
  }
  {
    auto o = base;
    o.decisions[coop_user(o)].delta_gbs = 1;
    detected += has(verify_constraints(o, c), "C6");
  }
  {
    auto o = base;
    auto& u = o.users[coop_user(o)];
    u.pos_xy_m = {o.uav.pos_xyz_m.x + 2.0 * c.r_uav_m, o.uav.pos_xyz_m.y};
    detected += has(verify_constraints(o, c), "C4");
  }
  return {clean_violations == 0 && detected == 4,
          fmt("%ld violations on 2 x 1e4 CUD slots (%ld with the relay deployed); faults "
              "detected %d/4 (overpower, over-cap, double association, out-of-coverage)",
              clean_violations, deployed, detected)};
}

Outcome determinism() {
  auto& cache = ordering_sweeps();
  const auto c = load_defaults();
  const int counts[] = {120, 160, 200};
  RunOptions one;
  one.n_workers = 1;
  RunOptions many;
  many.n_workers = 8;
  cache.serial = sweep_users(c, counts, kAllFrameworks, 1000, 7, one);
  cache.parallel_again = sweep_users(c, counts, kAllFrameworks, 1000, 7, many);
  const std::string a = format_csv(cache.parallel);
  const std::string b = format_csv(cache.parallel_again);
  const std::string s = format_csv(cache.serial);
  const bool csv_same = a == b && a == s;
  bool svg_same = true;
  for (auto m : {PlotMetric::kCapacity, PlotMetric::kEnergyEfficiency}) {
    svg_same = svg_same && render_svg(cache.parallel, m) == render_svg(cache.serial, m) &&
               render_svg(cache.parallel, m) == render_svg(cache.parallel_again, m);
  }
  return {csv_same && svg_same,
          fmt("CSV (%zu bytes) and SVG identical across reruns and 1 vs 8 workers: %s",
              a.size(), csv_same && svg_same ? "yes" : "no")};
}

Outcome visibility_geometry() {
  const OrbitGeometry orbit{6371e3, 6871e3, 2000e3};
  const double w = visibility_half_width(orbit);
  const double oracle = 0.2937408427629669;
  LeoSatellite sat;
  sat.period_s = orbital_period(500e3);
  sat.phase_rad = 1.1;
  Rng rng(derive_seed(9, 0));
  long mismatches = 0;
  long window_errors = 0;
  for (int i = 0; i < 100000; ++i) {
    const double t = uniform01(rng) * 20.0 * sat.period_s;
    const int v = satellite_visibility(t, sat, orbit);
    if (v != satellite_visibility(t + sat.period_s, sat, orbit)) ++mismatches;
    const double phi = std::abs(orbital_phase(t, sat));
    if (std::abs(phi - w) > 1e-9 && v != (phi <= w ? 1 : 0)) ++window_errors;
  }
  return {std::abs(w - 0.2937) <= 1e-4 && std::abs(w - oracle) < 1e-12 && mismatches == 0 &&
              window_errors == 0,
          fmt("half-width %.10f rad (oracle %.10f), periodicity mismatches %ld/1e5, window "
              "errors %ld",
              w, oracle, mismatches, window_errors)};
}

}  // namespace

int main() {
  std::printf("acceptance suite (%d hardware threads)\n", workers());
  report(1, "combining oracle equivalence", combining_oracle);
  report(2, "MRC dominance over EGC", mrc_dominance);
  report(3, "framework ordering", framework_ordering);
  report(4, "no-excess degeneracy", no_excess);
  report(5, "analytic identities", analytic_identities);
  report(6, "distributional checks", distributions);
  report(7, "constraint audit", constraint_audit);
  report(8, "determinism", determinism);
  report(9, "visibility geometry", visibility_geometry);
  std::printf("%s: %d of 9 criteria failed\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
