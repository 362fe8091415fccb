#include "sagin/cud.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sagin/combining.hpp"
#include "sagin/geometry.hpp"
#include "sagin/golden_section.hpp"
#include "sagin/units.hpp"

namespace sagin {

namespace {

constexpr double kMinGbsDistanceM = 1.0;

double sq(double x) { return x * x; }

// Satellite SNR denominators use B * sigma^2 unless the verbatim form is asked for.
double sat_bandwidth(const SystemConfig& c) { return c.sat_noise_per_hz ? 1.0 : c.bandwidth_hz; }

// Needy pool user whose R-disk holds the most needy pool users; ties by id.
int pick_hotspot_user(std::span<const Vec2> users, std::span<const int> needy, double radius) {
  int best = -1;
  int best_count = -1;
  for (int i : needy) {
    int count = 0;
    for (int k : needy) {
      if (sq(users[k].x - users[i].x) + sq(users[k].y - users[i].y) <= sq(radius)) ++count;
    }
    if (count > best_count || (count == best_count && i < best)) {
      best = i;
      best_count = count;
    }
  }
  return best;
}

struct PoolCandidate {
  int id = 0;
  double coop_rate = 0.0;
  double direct_rate = 0.0;
  double coop_snr = 0.0;
  double p_w = 0.0;
  AssocReason fail_reason = AssocReason::kSnrFail;

  double best_rate() const { return std::max(coop_rate, direct_rate); }
  bool prefers_coop() const { return coop_rate > direct_rate; }
};

}  // namespace

const char* framework_id(FrameworkKind kind) {
  switch (kind) {
    case FrameworkKind::kCud: return "cud";
    case FrameworkKind::kEgcSagin: return "egc-sagin";
    case FrameworkKind::kLeoGbs: return "leo-gbs";
    case FrameworkKind::kGbsOnly: return "gbs-only";
  }
  return "?";
}

std::optional<FrameworkKind> parse_framework(std::string_view name) {
  if (name == "cud") return FrameworkKind::kCud;
  if (name == "egc" || name == "egc-sagin") return FrameworkKind::kEgcSagin;
  if (name == "leo-gbs") return FrameworkKind::kLeoGbs;
  if (name == "gbs-only") return FrameworkKind::kGbsOnly;
  return std::nullopt;
}

SlotDraws draw_slot(int n_users, double t_s, const SystemConfig& config, Rng& rng) {
  SlotDraws d;
  d.t_s = t_s;
  const auto n = static_cast<std::size_t>(std::max(n_users, 0));
  d.gbs_fading.reserve(n);
  d.sat_user.reserve(n);
  d.atg_smallscale.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.gbs_fading.push_back(sample_rayleigh(rng));
    d.sat_user.push_back(sample_shadowed_rician(config.srf, rng));
    d.atg_smallscale.push_back(sample_atg_smallscale(config, rng));
  }
  d.sat_uav = sample_shadowed_rician(config.srf, rng);
  return d;
}

SlotInput make_slot_input(const SystemConfig& config, double t_s, Rng& rng) {
  SlotInput in;
  in.users = sample_users(config.n_users, {0.0, 0.0}, config.gbs_radius_m, rng);
  in.draws = draw_slot(config.n_users, t_s, config, rng);
  return in;
}

std::vector<double> gbs_snrs(std::span<const Vec2> users, const SlotDraws& draws,
                             const SystemConfig& config) {
  std::vector<double> out(users.size());
  const double n0 = noise_psd_w_per_hz(config);
  const double p_gbs = p_gbs_w(config);
  for (std::size_t i = 0; i < users.size(); ++i) {
    const double r = std::max(std::hypot(users[i].x, users[i].y), kMinGbsDistanceM);
    const double gain = rayleigh_path_gain(draws.gbs_fading[i], r, config.alpha_gbs);
    out[i] = snr_gbs_user(p_gbs, gain, config.bandwidth_hz, n0);
  }
  return out;
}

std::vector<int> rank_gbs_candidates(std::span<const double> gbs_gammas) {
  std::vector<int> order(gbs_gammas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  // Rate is strictly increasing in SNR, so ranking by SNR ranks by rate.
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gbs_gammas[a] > gbs_gammas[b]; });
  return order;
}

HotspotReport detect_hotspots(std::span<const Vec2> users, std::span<const int> gbs_rank,
                              const SystemConfig& config, HotspotMode mode) {
  HotspotReport report;
  report.mode = mode;
  if (mode == HotspotMode::kUser) {
    report.omega_j_effective = config.omega_uav_max;
    const int n = static_cast<int>(gbs_rank.size());
    for (int k = std::min(config.omega_gbs_max, n); k < n; ++k) {
      report.excess_users.push_back(gbs_rank[k]);
    }
    return report;
  }

  const double r = config.r_uav_m;
  report.omega_j_effective =
      static_cast<int>(std::llround(config.d_th_per_m2 * std::numbers::pi * r * r));
  if (users.empty()) return report;

  std::vector<int> rank_pos(users.size());
  for (std::size_t k = 0; k < gbs_rank.size(); ++k) rank_pos[gbs_rank[k]] = static_cast<int>(k);

  int best = 0;
  int best_count = -1;
  for (std::size_t i = 0; i < users.size(); ++i) {
    int count = 0;
    for (const auto& u : users) {
      if (sq(u.x - users[i].x) + sq(u.y - users[i].y) <= sq(r)) ++count;
    }
    if (count > best_count) {
      best = static_cast<int>(i);
      best_count = count;
    }
  }
  report.center = users[best];
  if (best_count > report.omega_j_effective) {
    std::vector<int> members;
    for (std::size_t k = 0; k < users.size(); ++k) {
      if (sq(users[k].x - users[best].x) + sq(users[k].y - users[best].y) <= sq(r)) {
        members.push_back(static_cast<int>(k));
      }
    }
    // Lowest GBS priority first.
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return rank_pos[a] > rank_pos[b]; });
    members.resize(static_cast<std::size_t>(best_count - report.omega_j_effective));
    report.excess_users = std::move(members);
  }
  return report;
}

double relay_link_snr(const RelayLinkBudget& b, double p_w) {
  return snr_uav_user(p_w, b.atg_gain, b.bandwidth_hz, b.noise_psd_w_hz);
}

double cooperative_snr(const RelayLinkBudget& b, double p_w, const SystemConfig& config,
                       Combiner combiner) {
  const double gamma_ij = relay_link_snr(b, p_w);
  double relay = 0.0;
  if (gamma_ij > 0.0 && b.gamma_js > 0.0) {
    const double n = b.noise_power_w();
    const double g = config.fixed_relay_gain
                         ? config.relay_gain_g
                         : relay_gain_from_power(p_w, b.p_sat_w, b.mean_h1_power, n);
    if (g > 0.0) relay = relay_branch_snr(b.gamma_js, gamma_ij, varsigma(p_w, n, g));
  }
  return combiner == Combiner::kMrc ? b.gamma_is + relay : egc_combined_snr(b.gamma_is, relay);
}

double power_objective_value(const RelayLinkBudget& b, double p_w, const SystemConfig& config,
                             Combiner combiner, PowerObjective objective,
                             double ee_overhead_w) {
  const double rate =
      rate_cooperative(b.bandwidth_hz, cooperative_snr(b, p_w, config, combiner), 1);
  if (objective == PowerObjective::kCapacity) return rate;
  return rate / (p_w + ee_overhead_w);
}

PowerDecision optimize_power(const RelayLinkBudget& b, const SystemConfig& config,
                             Combiner combiner, PowerObjective objective,
                             double ee_overhead_w) {
  const double p_max = p_max_w(config);
  PowerDecision out;
  out.p_min_w = min_power_for_threshold(gamma_th_linear(config), b.atg_gain, b.bandwidth_hz,
                                        b.noise_psd_w_hz);
  if (!out.p_min_w) return out;
  out.reachable = true;

  const auto search = golden_section_maximize(
      [&](double p) {
        return power_objective_value(b, p, config, combiner, objective, ee_overhead_w);
      },
      0.0, p_max, config.golden_tol_w);
  out.p_search_w = search.x;

  if (*out.p_min_w <= p_max) {
    out.p_w = std::clamp(search.x, *out.p_min_w, p_max);
  } else {
    out.p_w = p_max;
  }
  return out;
}

SlotOutcome evaluate_slot(FrameworkKind framework, const SlotInput& input,
                          const SystemConfig& config) {
  const int n = static_cast<int>(input.users.size());
  const auto& draws = input.draws;
  const double gamma_th = gamma_th_linear(config);
  const double n0 = noise_psd_w_per_hz(config);
  const double bw = config.bandwidth_hz;

  SlotOutcome out;
  out.framework = framework;
  out.users.resize(n);
  out.decisions.resize(n);
  out.links.resize(n);
  for (int i = 0; i < n; ++i) {
    out.users[i].id = i;
    out.users[i].pos_xy_m = input.users[i];
  }

  // Terrestrial tier: rank, then admit the top omega_G that clear the threshold.
  const auto gamma_g = gbs_snrs(input.users, draws, config);
  const auto rank = rank_gbs_candidates(gamma_g);
  const int gbs_slots = std::min(config.omega_gbs_max, n);
  int gbs_load = 0;
  for (int k = 0; k < n; ++k) {
    const int i = rank[k];
    auto& u = out.users[i];
    auto& d = out.decisions[i];
    out.links[i].gamma_gbs = gamma_g[i];
    out.links[i].r_gbs_m = std::hypot(input.users[i].x, input.users[i].y);
    u.snr_linear = gamma_g[i];
    if (k >= gbs_slots) {
      d.reason = AssocReason::kLoadFull;
      continue;
    }
    d.delta_gbs = gbs_indicator(gamma_g[i], gamma_th, gbs_load + 1, config.omega_gbs_max);
    if (d.delta_gbs == 1) {
      ++gbs_load;
      u.assoc = Association::kGbs;
      u.rate_bps = rate_gbs(bw, gamma_g[i], 1);
      d.reason = AssocReason::kOk;
    } else {
      d.reason = gamma_g[i] < gamma_th ? AssocReason::kSnrFail : AssocReason::kLoadFull;
    }
  }
  std::vector<int> pool(rank.begin() + gbs_slots, rank.end());

  // Satellite tier.
  const LeoSatellite sat = make_satellite(config);
  const OrbitGeometry orbit = make_orbit(config);
  out.visibility = satellite_visibility(draws.t_s, sat, orbit);
  const double d_sat = satellite_distance(draws.t_s, sat, orbit);
  const double sat_bw = sat_bandwidth(config);
  const double gamma_js = snr_sat_link(out.visibility, sat.tx_power_w,
                                       sat_channel_gain(d_sat, config.alpha_sat, draws.sat_uav),
                                       sat_bw, n0);
  for (int i : pool) {
    auto& l = out.links[i];
    l.visibility = out.visibility;
    l.d_sat_m = d_sat;
    l.gamma_sat_uav = gamma_js;
    l.gamma_sat_user = snr_sat_link(out.visibility, sat.tx_power_w,
                                    sat_channel_gain(d_sat, config.alpha_sat, draws.sat_user[i]),
                                    sat_bw, n0);
  }

  out.uav.id = 0;
  out.uav.radius_m = config.r_uav_m;
  out.uav.p_hover_w = hover_power(config.h_uav_m, config.hover_p0_w, config.hover_delta,
                                  config.hover_eps_per_m);
  out.omega_j_effective = config.omega_uav_max;
  const double mean_h1 = (config.srf.omega_direct + 2.0 * config.srf.b_scatter) *
                         std::pow(d_sat, -config.alpha_sat);

  std::vector<PoolCandidate> candidates;
  candidates.reserve(pool.size());
  if (framework != FrameworkKind::kGbsOnly) {
    for (int i : pool) {
      PoolCandidate c;
      c.id = i;
      const double g_is = out.links[i].gamma_sat_user;
      if (out.visibility == 1 && g_is >= gamma_th) c.direct_rate = rate_gbs(bw, g_is, 1);
      candidates.push_back(c);
    }
  }

  const bool sagin = framework == FrameworkKind::kCud || framework == FrameworkKind::kEgcSagin;
  if (sagin) {
    out.hotspots = detect_hotspots(input.users, rank, config, config.hotspot_mode);
    out.omega_j_effective = out.hotspots.omega_j_effective;

    std::vector<int> needy;
    for (int i : pool) {
      if (out.links[i].gamma_sat_user < gamma_th) needy.push_back(i);
    }
    const bool deploy = config.n_uav >= 1 && out.omega_j_effective > 0 &&
                        !out.hotspots.excess_users.empty() && out.visibility == 1 &&
                        !needy.empty();
    if (deploy) {
      Vec2 spot = out.hotspots.center;
      if (config.hotspot_mode == HotspotMode::kUser) {
        spot = input.users[pick_hotspot_user(input.users, needy, config.r_uav_m)];
      }
      out.uav.pos_xyz_m = {spot.x, spot.y, config.h_uav_m};

      const double overhead = out.uav.p_hover_w + p_gbs_w(config);
      const Combiner combiner =
          framework == FrameworkKind::kCud ? Combiner::kMrc : Combiner::kEgc;

      for (auto& c : candidates) {
        auto& l = out.links[c.id];
        const Vec2 pos = input.users[c.id];
        const double r = horizontal_distance(pos, out.uav.pos_xyz_m);
        l.d_uav_m = slant_distance(pos, out.uav.pos_xyz_m);
        if (!uav_coverage(r, config.r_uav_m, config.big_m, 1)) {
          if (c.direct_rate == 0.0) c.fail_reason = AssocReason::kOutOfRange;
          continue;
        }
        const auto atg = atg_link_gain(l.d_uav_m, elevation_angle(pos, out.uav.pos_xyz_m),
                                       draws.atg_smallscale[c.id], config);
        const double atg_gain = atg.pl_avg_db > config.pl_max_db ? 0.0 : atg.gain;

        RelayLinkBudget budget;
        budget.gamma_is = l.gamma_sat_user;
        budget.gamma_js = gamma_js;
        budget.atg_gain = atg_gain;
        budget.mean_h1_power = mean_h1;
        budget.p_sat_w = sat.tx_power_w;
        budget.bandwidth_hz = bw;
        budget.noise_psd_w_hz = n0;

        const PowerDecision power =
            optimize_power(budget, config, combiner, config.power_objective, overhead);
        if (!power.reachable) continue;
        l.gamma_uav_user = relay_link_snr(budget, power.p_w);
        const double g_cd = cooperative_snr(budget, power.p_w, config, combiner);
        const int delta = uav_association(g_cd, gamma_th, r, config.r_uav_m);
        c.coop_snr = g_cd;
        c.coop_rate = rate_cooperative(bw, g_cd, delta);
        c.p_w = power.p_w;
      }
    }
  }

  // Admission to the non-terrestrial tier: best rate first, ties by id.
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.best_rate() != b.best_rate()) return a.best_rate() > b.best_rate();
    return a.id < b.id;
  });
  int admitted = 0;
  int coop_admitted = 0;
  for (const auto& c : candidates) {
    auto& u = out.users[c.id];
    auto& d = out.decisions[c.id];
    if (c.best_rate() <= 0.0) {
      d.reason = c.fail_reason;
      continue;
    }
    if (admitted >= config.omega_uav_max) {
      d.reason = AssocReason::kLoadFull;
      continue;
    }
    bool coop = c.prefers_coop();
    if (coop && coop_admitted >= out.omega_j_effective) {
      if (c.direct_rate <= 0.0) {
        d.reason = AssocReason::kLoadFull;
        continue;
      }
      coop = false;
    }
    ++admitted;
    d.reason = AssocReason::kOk;
    if (coop) {
      ++coop_admitted;
      d.delta_uav = 1;
      u.assoc = Association::kUavSat;
      u.snr_linear = c.coop_snr;
      u.rate_bps = c.coop_rate;
      u.p_relay_w = c.p_w;
      out.p_uav_comm_w += c.p_w;
    } else {
      d.delta_sat = 1;
      u.assoc = Association::kSatDirect;
      u.snr_linear = out.links[c.id].gamma_sat_user;
      u.rate_bps = c.direct_rate;
    }
  }
  out.uav.deployed = coop_admitted > 0;
  out.uav.omega_max = out.omega_j_effective;
  if (out.uav.deployed) {
    // Gain at the largest committed power; every user shares it under the
    // capacity objective.
    double p_top = 0.0;
    for (const auto& u : out.users) p_top = std::max(p_top, u.p_relay_w);
    out.uav.gain_g = config.fixed_relay_gain
                         ? config.relay_gain_g
                         : relay_gain_from_power(p_top, sat.tx_power_w, mean_h1,
                                                 noise_power_w(config));
  }

  out.metrics = aggregate(out.users, out.decisions, config.omega_gbs_max, config.omega_uav_max);
  const double p_uav_total =
      out.uav.deployed ? total_uav_power(out.p_uav_comm_w, out.uav.p_hover_w) : 0.0;
  out.metrics.p_total_w = p_uav_total + p_gbs_w(config);
  out.metrics.energy_eff_bps_per_w = energy_efficiency(
      out.metrics.c_uav_sat_bps, out.metrics.c_gbs_bps, p_uav_total, p_gbs_w(config));
  return out;
}

SlotOutcome run_baseline_slot(FrameworkKind framework, const SlotInput& input,
                              const SystemConfig& config) {
  if (framework == FrameworkKind::kCud) {
    throw std::invalid_argument("run_baseline_slot: CUD is not a baseline");
  }
  return evaluate_slot(framework, input, config);
}

std::vector<std::string> verify_constraints(const SlotOutcome& o, const SystemConfig& config) {
  std::vector<std::string> v;
  const double p_max = p_max_w(config);
  const double r2_max = sq(config.r_uav_m);
  int n_gbs = 0;
  int n_coop = 0;
  int n_sat = 0;
  for (std::size_t i = 0; i < o.users.size(); ++i) {
    const auto& u = o.users[i];
    const auto& d = o.decisions[i];
    const std::string who = "user " + std::to_string(u.id);
    if (u.p_relay_w < 0.0 || u.p_relay_w > p_max) {
      v.push_back("C1: " + who + " relay power outside [0, p_max]");
    }
    for (int delta : {d.delta_gbs, d.delta_uav, d.delta_sat}) {
      if (delta != 0 && delta != 1) v.push_back("C5: " + who + " indicator not binary");
    }
    if (d.delta_gbs + d.delta_uav + d.delta_sat > 1) {
      v.push_back("C6: " + who + " associated more than once");
    }
    if (d.delta_uav == 1) {
      const double r2 = sq(u.pos_xy_m.x - o.uav.pos_xyz_m.x) + sq(u.pos_xy_m.y - o.uav.pos_xyz_m.y);
      if (r2 > r2_max) v.push_back("C4: " + who + " outside UAVr coverage");
      if (!o.uav.deployed) v.push_back("C4: " + who + " relayed by an undeployed UAVr");
    } else if (u.p_relay_w != 0.0) {
      v.push_back("C1: " + who + " draws relay power without a relay association");
    }
    const Association expected = d.delta_gbs   ? Association::kGbs
                                 : d.delta_uav ? Association::kUavSat
                                 : d.delta_sat ? Association::kSatDirect
                                               : Association::kUnserved;
    if (u.assoc != expected) v.push_back("C6: " + who + " state disagrees with indicators");
    if (u.assoc == Association::kUnserved && u.rate_bps != 0.0) {
      v.push_back("rate: " + who + " unserved with nonzero rate");
    }
    n_gbs += d.delta_gbs;
    n_coop += d.delta_uav;
    n_sat += d.delta_sat;
  }
  if (n_gbs > config.omega_gbs_max) v.push_back("C3: GBS association cap exceeded");
  if (n_coop + n_sat > config.omega_uav_max || n_coop > o.omega_j_effective) {
    v.push_back("C2: UAVr/satellite association cap exceeded");
  }
  const auto& m = o.metrics;
  if (m.n_gbs_served + m.n_uav_served + m.n_sat_served + m.n_unserved !=
      static_cast<int>(o.users.size())) {
    v.push_back("metrics: served counts do not sum to the user count");
  }
  if (std::abs(m.total_capacity_bps - (m.c_gbs_bps + m.c_uav_sat_bps)) >
      1e-9 * std::max(1.0, m.total_capacity_bps)) {
    v.push_back("metrics: total capacity differs from C_j + C_G");
  }
  return v;
}

}  // namespace sagin
