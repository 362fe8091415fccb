#include "sagin/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <variant>

#include "sagin/entities.hpp"
#include "sagin/geometry.hpp"
#include "sagin/units.hpp"

namespace sagin {

namespace {

template <typename E>
struct EnumField {
  E SystemConfig::*member;
  std::vector<std::pair<E, const char*>> names;
};

using Field = std::variant<double SystemConfig::*, int SystemConfig::*,
                           std::uint64_t SystemConfig::*, bool SystemConfig::*,
                           double ShadowedRicianParams::*, EnumField<HotspotMode>,
                           EnumField<PowerObjective>, EnumField<AtgFading>>;

struct KeyEntry {
  const char* key;
  Field field;
};

const std::vector<KeyEntry>& key_table() {
  static const std::vector<KeyEntry> table = {
      {"a_env", &SystemConfig::a_env},
      {"b_env", &SystemConfig::b_env},
      {"eta_los_db", &SystemConfig::eta_los_db},
      {"eta_nlos_db", &SystemConfig::eta_nlos_db},
      {"f_c_hz", &SystemConfig::f_c_hz},
      {"pl_max_db", &SystemConfig::pl_max_db},
      {"h_sat_m", &SystemConfig::h_sat_m},
      {"h_uav_m", &SystemConfig::h_uav_m},
      {"r_uav_m", &SystemConfig::r_uav_m},
      {"n_uav", &SystemConfig::n_uav},
      {"n_gbs", &SystemConfig::n_gbs},
      {"bandwidth_hz", &SystemConfig::bandwidth_hz},
      {"noise_psd_dbm_hz", &SystemConfig::noise_psd_dbm_hz},
      {"gamma_th_db", &SystemConfig::gamma_th_db},
      {"p_max_dbm", &SystemConfig::p_max_dbm},
      {"gbs_radius_m", &SystemConfig::gbs_radius_m},
      {"p_gbs_tx_dbm", &SystemConfig::p_gbs_tx_dbm},
      {"p_sat_tx_dbm", &SystemConfig::p_sat_tx_dbm},
      {"alpha_sat", &SystemConfig::alpha_sat},
      {"alpha_atg", &SystemConfig::alpha_atg},
      {"alpha_gbs", &SystemConfig::alpha_gbs},
      {"srf.omega_direct", &ShadowedRicianParams::omega_direct},
      {"srf.b_scatter", &ShadowedRicianParams::b_scatter},
      {"srf.m_nakagami", &ShadowedRicianParams::m_nakagami},
      {"atg_fading", EnumField<AtgFading>{&SystemConfig::atg_fading,
                                          {{AtgFading::kRician, "rician"},
                                           {AtgFading::kUnit, "unit"}}}},
      {"rician_k_db", &SystemConfig::rician_k_db},
      {"n_users", &SystemConfig::n_users},
      {"omega_uav_max", &SystemConfig::omega_uav_max},
      {"omega_gbs_max", &SystemConfig::omega_gbs_max},
      {"hover_p0_w", &SystemConfig::hover_p0_w},
      {"hover_delta", &SystemConfig::hover_delta},
      {"hover_eps_per_m", &SystemConfig::hover_eps_per_m},
      {"theta_p_rad", &SystemConfig::theta_p_rad},
      {"t_s_s", &SystemConfig::t_s_s},
      {"d_sr_m", &SystemConfig::d_sr_m},
      {"big_m", &SystemConfig::big_m},
      {"l_antennas", &SystemConfig::l_antennas},
      {"d_th_per_m2", &SystemConfig::d_th_per_m2},
      {"hotspot_mode", EnumField<HotspotMode>{&SystemConfig::hotspot_mode,
                                              {{HotspotMode::kUser, "user"},
                                               {HotspotMode::kDensity, "density"}}}},
      {"power_objective",
       EnumField<PowerObjective>{&SystemConfig::power_objective,
                                 {{PowerObjective::kCapacity, "capacity"},
                                  {PowerObjective::kEnergyEfficiency, "ee"}}}},
      {"golden_tol_w", &SystemConfig::golden_tol_w},
      {"sat_noise_per_hz", &SystemConfig::sat_noise_per_hz},
      {"fixed_relay_gain", &SystemConfig::fixed_relay_gain},
      {"relay_gain_g", &SystemConfig::relay_gain_g},
      {"atg_extra_free_space", &SystemConfig::atg_extra_free_space},
      {"n_slots", &SystemConfig::n_slots},
      {"n_trials", &SystemConfig::n_trials},
      {"seed", &SystemConfig::seed},
  };
  return table;
}

const KeyEntry* find_key(std::string_view key) {
  for (const auto& e : key_table()) {
    if (key == e.key) return &e;
  }
  return nullptr;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  if (!value.empty() && value.front() == '+') ++first;
  auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(value) +
                      "'");
  }
  return out;
}

double derived_d_sr(double h_sat_m) {
  return max_slant_range(kEarthRadius, h_sat_m, deg_to_rad(10.0));
}

double derived_d_th(double r_uav_m) {
  return 100.0 / (std::numbers::pi * r_uav_m * r_uav_m);
}

}  // namespace

const char* to_string(Association a) {
  switch (a) {
    case Association::kUnserved: return "unserved";
    case Association::kGbs: return "gbs";
    case Association::kUavSat: return "uav-sat";
    case Association::kSatDirect: return "sat-direct";
  }
  return "?";
}

SystemConfig load_defaults() {
  SystemConfig c;
  c.t_s_s = orbital_period(c.h_sat_m);
  c.d_sr_m = derived_d_sr(c.h_sat_m);
  c.d_th_per_m2 = derived_d_th(c.r_uav_m);
  return c;
}

LeoSatellite make_satellite(const SystemConfig& config) {
  return LeoSatellite{config.h_sat_m, p_sat_w(config), config.t_s_s, config.theta_p_rad,
                      config.srf};
}

std::vector<Violation> validate(const SystemConfig& c) {
  std::vector<Violation> out;
  auto positive = [&](const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) out.push_back({name, "must be positive"});
  };
  auto exponent = [&](const char* name, double v) {
    if (!(v > 0.0 && v <= 6.0)) out.push_back({name, "must lie in (0, 6]"});
  };

  positive("f_c_hz", c.f_c_hz);
  positive("h_sat_m", c.h_sat_m);
  positive("h_uav_m", c.h_uav_m);
  positive("r_uav_m", c.r_uav_m);
  positive("bandwidth_hz", c.bandwidth_hz);
  positive("gbs_radius_m", c.gbs_radius_m);
  positive("hover_p0_w", c.hover_p0_w);
  positive("big_m", c.big_m);
  positive("golden_tol_w", c.golden_tol_w);
  positive("d_th_per_m2", c.d_th_per_m2);
  positive("d_sr_m", c.d_sr_m);
  // dBm quantities: finite means a positive wattage.
  auto finite_dbm = [&](const char* name, const char* label, double v) {
    if (!std::isfinite(v)) out.push_back({name, std::string(label) + " must be positive"});
  };
  finite_dbm("p_max_dbm", "p_max", c.p_max_dbm);
  finite_dbm("p_gbs_tx_dbm", "p_gbs_tx", c.p_gbs_tx_dbm);
  finite_dbm("p_sat_tx_dbm", "p_sat_tx", c.p_sat_tx_dbm);
  finite_dbm("noise_psd_dbm_hz", "noise_psd", c.noise_psd_dbm_hz);
  if (!std::isfinite(c.gamma_th_db)) out.push_back({"gamma_th_db", "must be finite"});

  exponent("alpha_sat", c.alpha_sat);
  exponent("alpha_atg", c.alpha_atg);
  exponent("alpha_gbs", c.alpha_gbs);

  if (c.n_users < 0) out.push_back({"n_users", "must be >= 0"});
  if (c.omega_uav_max < 0) out.push_back({"omega_uav_max", "must be >= 0"});
  if (c.omega_gbs_max < 0) out.push_back({"omega_gbs_max", "must be >= 0"});
  if (c.n_uav < 0) out.push_back({"n_uav", "must be >= 0"});
  if (c.n_gbs < 1) out.push_back({"n_gbs", "must be >= 1"});
  if (c.l_antennas < 1) out.push_back({"l_antennas", "must be >= 1"});
  if (!(c.t_s_s > 0.0)) out.push_back({"t_s_s", "must be positive"});
  if (!(c.theta_p_rad >= 0.0 && c.theta_p_rad < kTwoPi)) {
    out.push_back({"theta_p_rad", "must lie in [0, 2*pi)"});
  }
  if (c.hover_delta < 0.0) out.push_back({"hover_delta", "must be >= 0"});
  if (c.hover_eps_per_m < 0.0) out.push_back({"hover_eps_per_m", "must be >= 0"});
  if (c.relay_gain_g < 0.0) out.push_back({"relay_gain_g", "must be >= 0"});
  if (c.n_slots < 1) out.push_back({"n_slots", "must be >= 1"});
  if (c.n_trials < 1) out.push_back({"n_trials", "must be >= 1"});

  if (c.srf.omega_direct < 0.0) out.push_back({"srf.omega_direct", "must be >= 0"});
  if (!(c.srf.b_scatter > 0.0)) out.push_back({"srf.b_scatter", "must be positive"});
  if (!(c.srf.m_nakagami >= 0.5)) {
    out.push_back({"srf.m_nakagami", "Nakagami shape must be >= 0.5"});
  }

  if (c.h_sat_m > 0.0 && c.d_sr_m > 0.0) {
    const double nadir = c.h_sat_m;
    const double r_ec = kEarthRadius + c.h_sat_m;
    const double horizon = std::sqrt(r_ec * r_ec - kEarthRadius * kEarthRadius);
    if (c.d_sr_m < nadir || c.d_sr_m > horizon) {
      out.push_back({"d_sr_m", "must lie between the nadir distance and the horizon slant range"});
    }
  }
  return out;
}

void set_config_value(SystemConfig& config, std::string_view key, std::string_view value) {
  const KeyEntry* entry = find_key(key);
  if (entry == nullptr) throw ConfigError("unknown key '" + std::string(key) + "'");
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, double SystemConfig::*>) {
          config.*f = parse_number<double>(key, value);
        } else if constexpr (std::is_same_v<F, int SystemConfig::*>) {
          config.*f = parse_number<int>(key, value);
        } else if constexpr (std::is_same_v<F, std::uint64_t SystemConfig::*>) {
          config.*f = parse_number<std::uint64_t>(key, value);
        } else if constexpr (std::is_same_v<F, bool SystemConfig::*>) {
          if (value == "true" || value == "1") {
            config.*f = true;
          } else if (value == "false" || value == "0") {
            config.*f = false;
          } else {
            throw ConfigError("invalid boolean for '" + std::string(key) + "': '" +
                              std::string(value) + "'");
          }
        } else if constexpr (std::is_same_v<F, double ShadowedRicianParams::*>) {
          config.srf.*f = parse_number<double>(key, value);
        } else {
          for (const auto& [e, name] : f.names) {
            if (value == name) {
              config.*(f.member) = e;
              return;
            }
          }
          throw ConfigError("invalid value for '" + std::string(key) + "': '" +
                            std::string(value) + "'");
        }
      },
      entry->field);
}

std::string get_config_value(const SystemConfig& config, std::string_view key) {
  const KeyEntry* entry = find_key(key);
  if (entry == nullptr) throw ConfigError("unknown key '" + std::string(key) + "'");
  return std::visit(
      [&](const auto& f) -> std::string {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, double SystemConfig::*>) {
          return format_double(config.*f);
        } else if constexpr (std::is_same_v<F, int SystemConfig::*> ||
                             std::is_same_v<F, std::uint64_t SystemConfig::*>) {
          return std::to_string(config.*f);
        } else if constexpr (std::is_same_v<F, bool SystemConfig::*>) {
          return config.*f ? "true" : "false";
        } else if constexpr (std::is_same_v<F, double ShadowedRicianParams::*>) {
          return format_double(config.srf.*f);
        } else {
          for (const auto& [e, name] : f.names) {
            if (config.*(f.member) == e) return name;
          }
          return "?";
        }
      },
      entry->field);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& e : key_table()) keys.emplace_back(e.key);
  return keys;
}

SystemConfig parse_config(std::string_view text) {
  SystemConfig config = load_defaults();
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (!seen.emplace(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        std::string(key) + "'");
    }
    try {
      set_config_value(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  // Quantities derived from altitude and radius follow them unless pinned.
  if (seen.contains("h_sat_m")) {
    if (!seen.contains("t_s_s")) config.t_s_s = orbital_period(config.h_sat_m);
    if (!seen.contains("d_sr_m")) config.d_sr_m = derived_d_sr(config.h_sat_m);
  }
  if (seen.contains("r_uav_m") && !seen.contains("d_th_per_m2")) {
    config.d_th_per_m2 = derived_d_th(config.r_uav_m);
  }
  return config;
}

SystemConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const SystemConfig& config) {
  std::string out;
  for (const auto& e : key_table()) {
    out += e.key;
    out += " = ";
    out += get_config_value(config, e.key);
    out += '\n';
  }
  return out;
}

double noise_psd_w_per_hz(const SystemConfig& c) { return dbm_to_watts(c.noise_psd_dbm_hz); }
double noise_power_w(const SystemConfig& c) { return c.bandwidth_hz * noise_psd_w_per_hz(c); }
double gamma_th_linear(const SystemConfig& c) { return db_to_linear(c.gamma_th_db); }
double p_max_w(const SystemConfig& c) { return dbm_to_watts(c.p_max_dbm); }
double p_gbs_w(const SystemConfig& c) { return dbm_to_watts(c.p_gbs_tx_dbm); }
double p_sat_w(const SystemConfig& c) { return dbm_to_watts(c.p_sat_tx_dbm); }

}  // namespace sagin
