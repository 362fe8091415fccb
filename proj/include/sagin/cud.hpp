#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sagin/association.hpp"
#include "sagin/channel.hpp"
#include "sagin/config.hpp"
#include "sagin/entities.hpp"
#include "sagin/link.hpp"
#include "sagin/rng.hpp"

namespace sagin {

enum class FrameworkKind { kCud, kEgcSagin, kLeoGbs, kGbsOnly };

inline constexpr FrameworkKind kAllFrameworks[] = {FrameworkKind::kCud, FrameworkKind::kEgcSagin,
                                                   FrameworkKind::kLeoGbs,
                                                   FrameworkKind::kGbsOnly};

/// Stable machine id: cud, egc-sagin, leo-gbs, gbs-only.
const char* framework_id(FrameworkKind kind);

/// Accepts the machine ids plus the short alias `egc`.
std::optional<FrameworkKind> parse_framework(std::string_view name);

struct HotspotReport {
  HotspotMode mode = HotspotMode::kUser;
  std::vector<int> excess_users;
  int omega_j_effective = 0;
  Vec2 center{};  // densest disk centre (density mode)
};

/// Stochastic draws of one slot. Every framework evaluates the same draws.
struct SlotDraws {
  double t_s = 0.0;
  std::vector<double> gbs_fading;         // Rayleigh magnitude per user
  std::vector<FadingSample> sat_user;     // SR fading per user
  FadingSample sat_uav;                   // SR fading of the UAVr's first hop
  std::vector<double> atg_smallscale;     // UAVr->user small-scale factor per user
};

/// The scenario a slot is evaluated on.
struct SlotInput {
  std::vector<Vec2> users;
  SlotDraws draws;
};

/// Everything a slot evaluation produced, kept for constraint audits.
struct SlotOutcome {
  FrameworkKind framework = FrameworkKind::kCud;
  std::vector<UserTerminal> users;
  std::vector<AssociationDecision> decisions;
  std::vector<LinkState> links;
  UavRelay uav;
  HotspotReport hotspots;
  int visibility = 0;
  int omega_j_effective = 0;
  double p_uav_comm_w = 0.0;
  SlotMetrics metrics;
};

SlotDraws draw_slot(int n_users, double t_s, const SystemConfig& config, Rng& rng);

/// Fresh users on the GBS disk plus the draws of slot time t.
SlotInput make_slot_input(const SystemConfig& config, double t_s, Rng& rng);

/// Per-user GBS SNRs (GBS at the origin).
std::vector<double> gbs_snrs(std::span<const Vec2> users, const SlotDraws& draws,
                             const SystemConfig& config);

/// User ids ordered by descending achievable GBS rate, ties by ascending id.
std::vector<int> rank_gbs_candidates(std::span<const double> gbs_gammas);

HotspotReport detect_hotspots(std::span<const Vec2> users, std::span<const int> gbs_rank,
                              const SystemConfig& config, HotspotMode mode);

/// Inputs of the per-user power problem: the user's direct and first-hop
/// satellite SNRs, its UAVr channel amplitude, and the noise budget.
struct RelayLinkBudget {
  double gamma_is = 0.0;
  double gamma_js = 0.0;
  double atg_gain = 0.0;
  double mean_h1_power = 0.0;  // E|h1|^2 including path loss
  double p_sat_w = 0.0;
  double bandwidth_hz = 0.0;
  double noise_psd_w_hz = 0.0;
  double noise_power_w() const { return bandwidth_hz * noise_psd_w_hz; }
};

enum class Combiner { kMrc, kEgc };

/// Combined SNR at UAVr power p under the configured AF-gain model.
double cooperative_snr(const RelayLinkBudget& budget, double p_w, const SystemConfig& config,
                       Combiner combiner);

/// gamma_ij at UAVr power p.
double relay_link_snr(const RelayLinkBudget& budget, double p_w);

struct PowerDecision {
  double p_w = 0.0;           // committed power after clipping
  double p_search_w = 0.0;    // unclipped line-search optimum
  std::optional<double> p_min_w;
  bool reachable = false;     // false when no finite power reaches the threshold
};

/// Line-search the per-user objective on [0, p_max] and clip against p_min.
/// `ee_overhead_w` is the fixed power the energy-efficiency objective divides
/// by in addition to p (hover + GBS).
PowerDecision optimize_power(const RelayLinkBudget& budget, const SystemConfig& config,
                             Combiner combiner, PowerObjective objective,
                             double ee_overhead_w);

/// The per-user objective the line search maximises.
double power_objective_value(const RelayLinkBudget& budget, double p_w,
                             const SystemConfig& config, Combiner combiner,
                             PowerObjective objective, double ee_overhead_w);

/// Evaluates one slot of `framework` on shared draws.
SlotOutcome evaluate_slot(FrameworkKind framework, const SlotInput& input,
                          const SystemConfig& config);

inline SlotOutcome run_cud_slot(const SlotInput& input, const SystemConfig& config) {
  return evaluate_slot(FrameworkKind::kCud, input, config);
}

/// Baselines; throws std::invalid_argument for FrameworkKind::kCud.
SlotOutcome run_baseline_slot(FrameworkKind framework, const SlotInput& input,
                              const SystemConfig& config);

/// Audits C1-C6 and the metric bookkeeping of a finished slot.
std::vector<std::string> verify_constraints(const SlotOutcome& outcome,
                                            const SystemConfig& config);

}  // namespace sagin
