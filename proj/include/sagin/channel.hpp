#pragma once

#include "sagin/config.hpp"
#include "sagin/rng.hpp"

namespace sagin {

struct AtgChannelSample {
  double p_los = 0.0;
  double pl_los_db = 0.0;
  double pl_nlos_db = 0.0;
  double pl_avg_db = 0.0;
  double gain = 0.0;  // amplitude
};

struct FadingSample {
  double amplitude = 0.0;
  double power = 0.0;  // amplitude^2
};

/// Sigmoid LoS probability of the air-to-ground link at elevation theta.
double los_probability(double theta_rad, double a_env, double b_env);

/// Free-space loss at f_c plus an excess loss `eta_db`.
double pathloss_db(double d_m, double f_c_hz, double eta_db);

/// LoS/NLoS-probability-weighted path loss in its closed form
/// A / (1 + a exp(-b (theta_deg - a))) + 20 log10(d) + beta.
double avg_pathloss_db(double theta_rad, double d_m, const SystemConfig& config);

/// UAVr-to-user amplitude: smallscale * (4 pi f_c d / c)^(-alpha/2) * 10^(-PL_avg/20).
AtgChannelSample atg_channel_gain(double d_m, double theta_rad, double smallscale,
                                  const SystemConfig& config);

/// Same record, but the amplitude carries only the averaged path loss:
/// smallscale * 10^(-PL_avg/20).
AtgChannelSample atg_pathloss_gain(double d_m, double theta_rad, double smallscale,
                                   const SystemConfig& config);

/// Dispatches on config.atg_extra_free_space.
AtgChannelSample atg_link_gain(double d_m, double theta_rad, double smallscale,
                               const SystemConfig& config);

/// |A e^{j phi} + Z| with A^2 ~ Gamma(m, Omega/m), Z ~ CN(0, 2b).
FadingSample sample_shadowed_rician(const ShadowedRicianParams& params, Rng& rng);

/// sqrt(power * d^-alpha).
double sat_channel_gain(double d_m, double alpha_sat, const FadingSample& srf_sample);

/// Standard complex Gaussian magnitude; its square is Exp(1).
double sample_rayleigh(Rng& rng);

/// g * r^-alpha for a given fading magnitude g.
double rayleigh_path_gain(double g, double r_m, double alpha_gbs);

/// Draws g and returns g * r^-alpha.
double rayleigh_gain(double r_m, double alpha_gbs, Rng& rng);

/// Unit-mean-power Rician amplitude with K-factor `k_linear`.
double sample_rician(double k_linear, Rng& rng);

/// Small-scale factor of the ATG link per config.atg_fading.
double sample_atg_smallscale(const SystemConfig& config, Rng& rng);

double standard_normal(Rng& rng);

}  // namespace sagin
