#pragma once

#include <span>
#include <stdexcept>

#include "sagin/entities.hpp"

namespace sagin {

enum class AssocReason { kOk, kSnrFail, kLoadFull, kOutOfRange };

struct AssociationDecision {
  int delta_gbs = 0;
  int delta_uav = 0;  // cooperative UAVr + satellite
  int delta_sat = 0;  // satellite only
  AssocReason reason = AssocReason::kSnrFail;
};

struct SlotMetrics {
  double c_uav_sat_bps = 0.0;  // every non-GBS user: cooperative and satellite-direct
  double c_gbs_bps = 0.0;
  double total_capacity_bps = 0.0;
  double p_total_w = 0.0;
  double energy_eff_bps_per_w = 0.0;
  int n_gbs_served = 0;
  int n_uav_served = 0;  // cooperative users only
  int n_sat_served = 0;
  int n_unserved = 0;

  bool operator==(const SlotMetrics&) const = default;
};

/// Raised when a slot's inputs already break an association cap.
class AssociationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 1 iff gamma >= gamma_th and load <= omega_max. `current_load` is the
/// cardinality of the GBS set with the candidate included.
int gbs_indicator(double gamma_linear, double gamma_th_linear, int current_load,
                  int omega_gbs_max);

/// Big-M coverage relaxation r^2 <= R^2 + M (1 - delta).
bool uav_coverage(double r_m, double radius_m, double big_m, int delta);

int uav_association(double gamma_cd_linear, double gamma_th_linear, double r_m,
                    double radius_m);

double rate_gbs(double bandwidth_hz, double gamma_linear, int delta);

/// Half-duplex cooperative rate (B / 2) log2(1 + gamma).
double rate_cooperative(double bandwidth_hz, double gamma_cd_linear, int delta);

/// Capacity and count fields of SlotMetrics (power fields left zero).
SlotMetrics aggregate(std::span<const UserTerminal> users,
                      std::span<const AssociationDecision> decisions, int omega_gbs_max,
                      int omega_uav_max);

/// Number of users beyond the GBS cap.
inline int excess_user_count(int n_users, int omega_gbs_max) {
  return n_users > omega_gbs_max ? n_users - omega_gbs_max : 0;
}

/// (C_j + C_G) / (p_uav_total + p_gbs). Throws std::domain_error on zero power.
double energy_efficiency(double c_uav_bps, double c_gbs_bps, double p_uav_total_w,
                         double p_gbs_w);

}  // namespace sagin
