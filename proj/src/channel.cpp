#include "sagin/channel.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sagin/units.hpp"

namespace sagin {

double los_probability(double theta_rad, double a_env, double b_env) {
  return 1.0 / (1.0 + a_env * std::exp(-b_env * (rad_to_deg(theta_rad) - a_env)));
}

double pathloss_db(double d_m, double f_c_hz, double eta_db) {
  return 20.0 * std::log10(4.0 * std::numbers::pi * f_c_hz * d_m / kSpeedOfLight) + eta_db;
}

double avg_pathloss_db(double theta_rad, double d_m, const SystemConfig& c) {
  const double A = c.eta_los_db - c.eta_nlos_db;
  const double beta =
      20.0 * std::log10(4.0 * std::numbers::pi * c.f_c_hz / kSpeedOfLight) + c.eta_nlos_db;
  return A * los_probability(theta_rad, c.a_env, c.b_env) + 20.0 * std::log10(d_m) + beta;
}

namespace {

AtgChannelSample atg_record(double d_m, double theta_rad, const SystemConfig& c) {
  AtgChannelSample s;
  s.p_los = los_probability(theta_rad, c.a_env, c.b_env);
  s.pl_los_db = pathloss_db(d_m, c.f_c_hz, c.eta_los_db);
  s.pl_nlos_db = pathloss_db(d_m, c.f_c_hz, c.eta_nlos_db);
  s.pl_avg_db = avg_pathloss_db(theta_rad, d_m, c);
  return s;
}

}  // namespace

AtgChannelSample atg_channel_gain(double d_m, double theta_rad, double smallscale,
                                  const SystemConfig& c) {
  AtgChannelSample s = atg_record(d_m, theta_rad, c);
  const double free_space = 4.0 * std::numbers::pi * c.f_c_hz * d_m / kSpeedOfLight;
  s.gain = smallscale * std::pow(free_space, -c.alpha_atg / 2.0) *
           std::pow(10.0, -s.pl_avg_db / 20.0);
  return s;
}

AtgChannelSample atg_pathloss_gain(double d_m, double theta_rad, double smallscale,
                                   const SystemConfig& c) {
  AtgChannelSample s = atg_record(d_m, theta_rad, c);
  s.gain = smallscale * std::pow(10.0, -s.pl_avg_db / 20.0);
  return s;
}

AtgChannelSample atg_link_gain(double d_m, double theta_rad, double smallscale,
                               const SystemConfig& c) {
  return c.atg_extra_free_space ? atg_channel_gain(d_m, theta_rad, smallscale, c)
                             : atg_pathloss_gain(d_m, theta_rad, smallscale, c);
}

double standard_normal(Rng& rng) {
  // Box-Muller on 53-bit uniforms; stateless so draws never straddle callers.
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

FadingSample sample_shadowed_rician(const ShadowedRicianParams& p, Rng& rng) {
  std::gamma_distribution<double> los_power(p.m_nakagami, p.omega_direct / p.m_nakagami);
  const double a = p.omega_direct > 0.0 ? std::sqrt(los_power(rng)) : 0.0;
  const double phi = kTwoPi * uniform01(rng);
  const double sd = std::sqrt(p.b_scatter);
  const double re = a * std::cos(phi) + sd * standard_normal(rng);
  const double im = a * std::sin(phi) + sd * standard_normal(rng);
  FadingSample s;
  s.power = re * re + im * im;
  s.amplitude = std::sqrt(s.power);
  s.power = s.amplitude * s.amplitude;
  return s;
}

double sat_channel_gain(double d_m, double alpha_sat, const FadingSample& srf) {
  return std::sqrt(srf.power * std::pow(d_m, -alpha_sat));
}

double sample_rayleigh(Rng& rng) {
  const double re = standard_normal(rng) * std::numbers::sqrt2 / 2.0;
  const double im = standard_normal(rng) * std::numbers::sqrt2 / 2.0;
  return std::hypot(re, im);
}

double rayleigh_path_gain(double g, double r_m, double alpha_gbs) {
  return g * std::pow(r_m, -alpha_gbs);
}

double rayleigh_gain(double r_m, double alpha_gbs, Rng& rng) {
  return rayleigh_path_gain(sample_rayleigh(rng), r_m, alpha_gbs);
}

double sample_rician(double k_linear, Rng& rng) {
  const double los = std::sqrt(k_linear / (k_linear + 1.0));
  const double sd = std::sqrt(0.5 / (k_linear + 1.0));
  return std::hypot(los + sd * standard_normal(rng), sd * standard_normal(rng));
}

double sample_atg_smallscale(const SystemConfig& config, Rng& rng) {
  if (config.atg_fading == AtgFading::kUnit) return 1.0;
  return sample_rician(db_to_linear(config.rician_k_db), rng);
}

}  // namespace sagin
