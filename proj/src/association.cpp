#include "sagin/association.hpp"

#include <cmath>
#include <string>

namespace sagin {

int gbs_indicator(double gamma_linear, double gamma_th_linear, int current_load,
                  int omega_gbs_max) {
  return (gamma_linear >= gamma_th_linear && current_load <= omega_gbs_max) ? 1 : 0;
}

bool uav_coverage(double r_m, double radius_m, double big_m, int delta) {
  return r_m * r_m <= radius_m * radius_m + big_m * (1 - delta);
}

int uav_association(double gamma_cd_linear, double gamma_th_linear, double r_m,
                    double radius_m) {
  return (gamma_cd_linear >= gamma_th_linear && r_m * r_m <= radius_m * radius_m) ? 1 : 0;
}

double rate_gbs(double bandwidth_hz, double gamma_linear, int delta) {
  return bandwidth_hz * std::log2(1.0 + gamma_linear) * delta;
}

double rate_cooperative(double bandwidth_hz, double gamma_cd_linear, int delta) {
  return (bandwidth_hz / 2.0) * std::log2(1.0 + gamma_cd_linear) * delta;
}

SlotMetrics aggregate(std::span<const UserTerminal> users,
                      std::span<const AssociationDecision> decisions, int omega_gbs_max,
                      int omega_uav_max) {
  if (users.size() != decisions.size()) {
    throw AssociationError("one decision per user required");
  }
  SlotMetrics m;
  for (std::size_t i = 0; i < users.size(); ++i) {
    const auto& d = decisions[i];
    if (d.delta_gbs + d.delta_uav + d.delta_sat > 1) {
      throw AssociationError("user " + std::to_string(users[i].id) +
                             " holds more than one association");
    }
    if (d.delta_gbs == 1) {
      m.c_gbs_bps += users[i].rate_bps;
      ++m.n_gbs_served;
    } else if (d.delta_uav == 1) {
      m.c_uav_sat_bps += users[i].rate_bps;
      ++m.n_uav_served;
    } else if (d.delta_sat == 1) {
      m.c_uav_sat_bps += users[i].rate_bps;
      ++m.n_sat_served;
    } else {
      ++m.n_unserved;
    }
  }
  if (m.n_gbs_served > omega_gbs_max) {
    throw AssociationError("GBS association cap exceeded");
  }
  if (m.n_uav_served + m.n_sat_served > omega_uav_max) {
    throw AssociationError("UAVr/satellite association cap exceeded");
  }
  m.total_capacity_bps = m.c_uav_sat_bps + m.c_gbs_bps;
  return m;
}

double energy_efficiency(double c_uav_bps, double c_gbs_bps, double p_uav_total_w,
                         double p_gbs_w) {
  const double p = p_uav_total_w + p_gbs_w;
  if (!(p > 0.0)) throw std::domain_error("total power must be positive");
  return (c_uav_bps + c_gbs_bps) / p;
}

}  // namespace sagin
