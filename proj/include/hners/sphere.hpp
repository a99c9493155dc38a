#pragma once

#include <Eigen/Core>

namespace hners {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

/// Wraps any finite longitude into [0, 2*pi). Idempotent.
double wrap_longitude(double lon_raw);

/// A point on the unit sphere: latitude in [-pi/2, pi/2] (0 at the equator,
/// +pi/2 at the North pole) and longitude in [0, 2*pi). Constructors wrap the
/// longitude and reject non-finite or out-of-range latitudes.
struct SphericalPoint {
  double lat = 0.0;
  double lon = 0.0;

  SphericalPoint() = default;
  SphericalPoint(double lat_rad, double lon_rad);

  static SphericalPoint from_degrees(double lat_deg, double lon_deg);
};

/// (cos lat cos lon, cos lat sin lon, sin lat); unit norm.
Eigen::Vector3d to_unit_vector(const SphericalPoint& p);

/// Longitude distance measured from lon_a towards increasing longitude,
/// wrapping past the prime meridian: lon_b - lon_a if positive, else
/// lon_b - lon_a + 2*pi. Equal inputs are a degenerate interval and throw.
double lon_distance_on_interval(double lon_a, double lon_b);

/// Great-circle distance in radians, robust near 0 and pi.
double great_circle_distance(const SphericalPoint& a, const SphericalPoint& b);

}  // namespace hners
