#pragma once

#include <array>
#include <cstdint>

#include "sagin/config.hpp"

namespace sagin {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Vec2&) const = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  bool operator==(const Vec3&) const = default;
};

enum class Association : std::uint8_t {
  kUnserved,
  kGbs,
  kUavSat,        // cooperative satellite + UAVr diversity link
  kSatDirect,     // satellite only
};

const char* to_string(Association a);

struct UserTerminal {
  int id = 0;
  Vec2 pos_xy_m{};
  Association assoc = Association::kUnserved;
  double snr_linear = 0.0;
  double rate_bps = 0.0;
  double p_relay_w = 0.0;  // UAVr transmit power spent on this user
};

struct UavRelay {
  int id = 0;
  Vec3 pos_xyz_m{};
  double radius_m = 0.0;
  double gain_g = 0.0;
  double p_hover_w = 0.0;
  int omega_max = 0;
  bool deployed = false;
};

struct LeoSatellite {
  double altitude_m = 0.0;
  double tx_power_w = 0.0;
  double period_s = 0.0;
  double phase_rad = 0.0;
  ShadowedRicianParams srf{};
};

LeoSatellite make_satellite(const SystemConfig& config);

}  // namespace sagin
