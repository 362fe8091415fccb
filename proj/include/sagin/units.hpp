#pragma once

#include <cmath>
#include <numbers>

namespace sagin {

inline constexpr double kSpeedOfLight = 2.998e8;   // m/s
inline constexpr double kEarthGm = 3.986004418e14;  // m^3/s^2
inline constexpr double kEarthRadius = 6378137.0;  // m, WGS-84 equatorial
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace sagin
