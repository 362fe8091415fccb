#pragma once

#include <optional>
#include <stdexcept>

namespace sagin {

/// Snapshot of one user's four links in a slot.
struct LinkState {
  double gamma_gbs = 0.0;
  double gamma_sat_user = 0.0;
  double gamma_sat_uav = 0.0;
  double gamma_uav_user = 0.0;
  int visibility = 0;
  double d_uav_m = 0.0;
  double d_sat_m = 0.0;
  double r_gbs_m = 0.0;
};

// Every SNR below is p * gain^2 / (B * sigma^2) with sigma^2 a PSD in W/Hz.

double snr_uav_user(double p_w, double gain, double bandwidth_hz, double noise_psd_w_hz);
double snr_sat_link(int visibility, double p_sat_w, double gain, double bandwidth_hz,
                    double noise_psd_w_hz);
double snr_gbs_user(double p_gbs_w, double gain, double bandwidth_hz, double noise_psd_w_hz);

/// Smallest UAVr power reaching `gamma_th_linear`; nullopt when the user is
/// unreachable (zero gain).
std::optional<double> min_power_for_threshold(double gamma_th_linear, double gain,
                                              double bandwidth_hz, double noise_psd_w_hz);

double hover_power(double h_m, double p0_w, double delta, double eps_per_m);

/// Inverse of hover_power. Throws std::domain_error below p0 (1 + delta).
double hover_altitude(double p_w, double p0_w, double delta, double eps_per_m);

inline double total_uav_power(double p_comm_w, double p_hover_w) { return p_comm_w + p_hover_w; }

}  // namespace sagin
