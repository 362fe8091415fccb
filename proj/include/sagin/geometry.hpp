#pragma once

#include <vector>

#include "sagin/entities.hpp"
#include "sagin/rng.hpp"

namespace sagin {

/// Earth/orbit radii for the LEO access geometry.
struct OrbitGeometry {
  double r_earth_m = 0.0;
  double r_ec_m = 0.0;  // Earth centre to satellite
  double d_sr_m = 0.0;  // maximum slant range
};

OrbitGeometry make_orbit(const SystemConfig& config);

double horizontal_distance(Vec2 user_xy, Vec3 uav_xyz);
double slant_distance(Vec2 user_xy, Vec3 uav_xyz);

/// atan2(h, r): pi/2 directly below the UAVr.
double elevation_angle(Vec2 user_xy, Vec3 uav_xyz);

/// `count` points uniform on the disk (a binomial point process, i.e. a PPP
/// conditioned on its count).
std::vector<Vec2> sample_users(int count, Vec2 center, double radius_m, Rng& rng);

/// Orbital phase of the satellite relative to the ground site at time t,
/// wrapped to (-pi, pi].
double orbital_phase(double t_s, const LeoSatellite& sat);

/// The cosine threshold (R_E^2 + r_EC^2 - d_SR^2) / (2 R_E r_EC).
double visibility_threshold(const OrbitGeometry& orbit);

/// Half-width of the visibility arc in phase; 0 when never visible, pi when
/// always visible.
double visibility_half_width(const OrbitGeometry& orbit);

int satellite_visibility(double t_s, const LeoSatellite& sat, const OrbitGeometry& orbit);

/// Ground-to-satellite distance from the law of cosines at time t.
double satellite_distance(double t_s, const LeoSatellite& sat, const OrbitGeometry& orbit);

/// Kepler period of a circular orbit at altitude h.
double orbital_period(double h_sat_m);

/// Slant range to a satellite at altitude h seen at elevation `min_elev_rad`.
double max_slant_range(double r_earth_m, double h_sat_m, double min_elev_rad);

}  // namespace sagin
