#include "sagin/geometry.hpp"

#include <cmath>
#include <numbers>

#include "sagin/units.hpp"

namespace sagin {

OrbitGeometry make_orbit(const SystemConfig& config) {
  return OrbitGeometry{kEarthRadius, kEarthRadius + config.h_sat_m, config.d_sr_m};
}

double horizontal_distance(Vec2 user_xy, Vec3 uav_xyz) {
  return std::hypot(uav_xyz.x - user_xy.x, uav_xyz.y - user_xy.y);
}

double slant_distance(Vec2 user_xy, Vec3 uav_xyz) {
  return std::hypot(horizontal_distance(user_xy, uav_xyz), uav_xyz.z);
}

double elevation_angle(Vec2 user_xy, Vec3 uav_xyz) {
  return std::atan2(uav_xyz.z, horizontal_distance(user_xy, uav_xyz));
}

std::vector<Vec2> sample_users(int count, Vec2 center, double radius_m, Rng& rng) {
  std::vector<Vec2> points;
  points.reserve(count > 0 ? static_cast<std::size_t>(count) : 0);
  const double r2 = radius_m * radius_m;
  while (static_cast<int>(points.size()) < count) {
    const double x = radius_m * (2.0 * uniform01(rng) - 1.0);
    const double y = radius_m * (2.0 * uniform01(rng) - 1.0);
    if (x * x + y * y <= r2) points.push_back({center.x + x, center.y + y});
  }
  return points;
}

double orbital_phase(double t_s, const LeoSatellite& sat) {
  const double raw = kTwoPi * std::fmod(t_s, sat.period_s) / sat.period_s - sat.phase_rad;
  return std::remainder(raw, kTwoPi);
}

double visibility_threshold(const OrbitGeometry& o) {
  return (o.r_earth_m * o.r_earth_m + o.r_ec_m * o.r_ec_m - o.d_sr_m * o.d_sr_m) /
         (2.0 * o.r_earth_m * o.r_ec_m);
}

double visibility_half_width(const OrbitGeometry& orbit) {
  const double rhs = visibility_threshold(orbit);
  if (rhs > 1.0) return 0.0;
  if (rhs <= -1.0) return std::numbers::pi;
  return std::acos(rhs);
}

int satellite_visibility(double t_s, const LeoSatellite& sat, const OrbitGeometry& orbit) {
  return std::cos(orbital_phase(t_s, sat)) >= visibility_threshold(orbit) ? 1 : 0;
}

double satellite_distance(double t_s, const LeoSatellite& sat, const OrbitGeometry& o) {
  const double c = std::cos(orbital_phase(t_s, sat));
  const double d2 = o.r_earth_m * o.r_earth_m + o.r_ec_m * o.r_ec_m -
                    2.0 * o.r_earth_m * o.r_ec_m * c;
  return std::sqrt(std::max(d2, 0.0));
}

double orbital_period(double h_sat_m) {
  const double a = kEarthRadius + h_sat_m;
  return kTwoPi * std::sqrt(a * a * a / kEarthGm);
}

double max_slant_range(double r_earth_m, double h_sat_m, double min_elev_rad) {
  const double s = r_earth_m * std::sin(min_elev_rad);
  return std::sqrt(s * s + 2.0 * r_earth_m * h_sat_m + h_sat_m * h_sat_m) - s;
}

}  // namespace sagin
