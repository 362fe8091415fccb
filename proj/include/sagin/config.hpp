#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sagin {

/// Shadowed-Rician (SR) land-mobile satellite fading parameters.
struct ShadowedRicianParams {
  double omega_direct = 0.835;  // average power of the LoS component
  double b_scatter = 0.126;     // half the average power of the scatter component
  double m_nakagami = 10.1;     // Nakagami-m shape of the LoS amplitude

  bool operator==(const ShadowedRicianParams&) const = default;
};

enum class HotspotMode { kUser, kDensity };
enum class PowerObjective { kCapacity, kEnergyEfficiency };
enum class AtgFading { kRician, kUnit };

/// Every simulation parameter. Field names double as config-file keys.
struct SystemConfig {
  // Air-to-ground environment.
  double a_env = 9.61;
  double b_env = 0.16;
  double eta_los_db = 1.0;
  double eta_nlos_db = 20.0;
  double f_c_hz = 2e9;
  double pl_max_db = 119.0;

  // Platforms.
  double h_sat_m = 500e3;
  double h_uav_m = 30.0;
  double r_uav_m = 100.0;
  int n_uav = 1;
  int n_gbs = 1;

  // Radio budget.
  double bandwidth_hz = 20e6;
  double noise_psd_dbm_hz = -174.0;
  double gamma_th_db = 3.0;
  double p_max_dbm = 20.0;
  double gbs_radius_m = 500.0;
  double p_gbs_tx_dbm = 40.0;
  double p_sat_tx_dbm = 50.0;
  double alpha_sat = 2.0;
  double alpha_atg = 2.0;
  double alpha_gbs = 3.0;
  ShadowedRicianParams srf{};
  AtgFading atg_fading = AtgFading::kRician;
  double rician_k_db = 10.0;

  // Users and association caps.
  int n_users = 200;
  int omega_uav_max = 100;
  int omega_gbs_max = 100;

  // UAVr hover model.
  double hover_p0_w = 80.0;
  double hover_delta = 0.1;
  double hover_eps_per_m = 0.01;

  // Orbit. t_s_s and d_sr_m default to values derived from h_sat_m
  // (Kepler period, 10 degree minimum elevation).
  double theta_p_rad = 0.0;
  double t_s_s = 0.0;
  double d_sr_m = 0.0;

  // Deployment.
  double big_m = 1e12;
  int l_antennas = 1;
  double d_th_per_m2 = 0.0;  // defaults to 100 / (pi * r_uav^2)
  HotspotMode hotspot_mode = HotspotMode::kUser;
  PowerObjective power_objective = PowerObjective::kCapacity;
  double golden_tol_w = 1e-6;

  // Fidelity switches. Each restores a verbatim formula in place of the
  // dimensionally consistent default.
  bool sat_noise_per_hz = false;       // satellite SNR over sigma^2 rather than B*sigma^2
  bool fixed_relay_gain = false;       // AF gain fixed at relay_gain_g
  double relay_gain_g = 1e6;
  bool atg_extra_free_space = true;    // keep the explicit free-space factor in the ATG gain

  // Monte Carlo.
  int n_slots = 32;
  int n_trials = 1000;
  std::uint64_t seed = 1;

  bool operator==(const SystemConfig&) const = default;
};

/// Baseline scenario values plus the defaults for every constant the model leaves open.
SystemConfig load_defaults();

/// One failed invariant: which field and which rule.
struct Violation {
  std::string field;
  std::string rule;
  std::string message() const { return field + ": " + rule; }
};

std::vector<Violation> validate(const SystemConfig& config);

/// Raised for malformed configuration text (unknown key, bad value, syntax).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `key = value` lines, `#` comments. Keys absent from the text keep their
/// defaults; unknown keys throw ConfigError.
SystemConfig parse_config(std::string_view text);
SystemConfig load_config_file(const std::string& path);

/// Writes every key with round-trip precision.
std::string serialize_config(const SystemConfig& config);

/// Sets a single key from its textual value; throws ConfigError.
void set_config_value(SystemConfig& config, std::string_view key, std::string_view value);
std::string get_config_value(const SystemConfig& config, std::string_view key);
std::vector<std::string> config_keys();

// Derived physical quantities.
double noise_psd_w_per_hz(const SystemConfig& config);
double noise_power_w(const SystemConfig& config);  // B * sigma^2
double gamma_th_linear(const SystemConfig& config);
double p_max_w(const SystemConfig& config);
double p_gbs_w(const SystemConfig& config);
double p_sat_w(const SystemConfig& config);

}  // namespace sagin
