#include "sagin/link.hpp"

#include <cmath>

namespace sagin {

double snr_uav_user(double p_w, double gain, double bandwidth_hz, double noise_psd_w_hz) {
  return p_w * gain * gain / (bandwidth_hz * noise_psd_w_hz);
}

double snr_sat_link(int visibility, double p_sat_w, double gain, double bandwidth_hz,
                    double noise_psd_w_hz) {
  if (visibility == 0) return 0.0;
  return p_sat_w * gain * gain / (bandwidth_hz * noise_psd_w_hz);
}

double snr_gbs_user(double p_gbs_w, double gain, double bandwidth_hz, double noise_psd_w_hz) {
  return p_gbs_w * gain * gain / (bandwidth_hz * noise_psd_w_hz);
}

std::optional<double> min_power_for_threshold(double gamma_th_linear, double gain,
                                              double bandwidth_hz, double noise_psd_w_hz) {
  if (!(gain > 0.0)) return std::nullopt;
  return gamma_th_linear * bandwidth_hz * noise_psd_w_hz / (gain * gain);
}

double hover_power(double h_m, double p0_w, double delta, double eps_per_m) {
  return p0_w * (1.0 + delta) * std::exp(eps_per_m * h_m / 2.0);
}

double hover_altitude(double p_w, double p0_w, double delta, double eps_per_m) {
  const double floor_w = p0_w * (1.0 + delta);
  if (p_w < floor_w) {
    throw std::domain_error("hover power below p0 (1 + delta)");
  }
  return (2.0 / eps_per_m) * std::log(p_w / floor_w);
}

}  // namespace sagin
