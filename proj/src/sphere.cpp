#include "hners/sphere.hpp"

#include <cmath>

#include "hners/errors.hpp"

namespace hners {

double wrap_longitude(double lon_raw) {
  if (!std::isfinite(lon_raw)) {
    throw InvalidInput("wrap_longitude: non-finite longitude");
  }
  double w = std::fmod(lon_raw, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod/add rounding can land exactly on 2*pi
  return w;
}

SphericalPoint::SphericalPoint(double lat_rad, double lon_rad) {
  if (!std::isfinite(lat_rad) || lat_rad < -kHalfPi || lat_rad > kHalfPi) {
    throw InvalidInput("SphericalPoint: latitude outside [-pi/2, pi/2]");
  }
  lat = lat_rad;
  lon = wrap_longitude(lon_rad);
}

SphericalPoint SphericalPoint::from_degrees(double lat_deg, double lon_deg) {
  return SphericalPoint(lat_deg * kPi / 180.0, lon_deg * kPi / 180.0);
}

Eigen::Vector3d to_unit_vector(const SphericalPoint& p) {
  const double c = std::cos(p.lat);
  return {c * std::cos(p.lon), c * std::sin(p.lon), std::sin(p.lat)};
}

double lon_distance_on_interval(double lon_a, double lon_b) {
  if (lon_a == lon_b) {
    throw InvalidInput("lon_distance_on_interval: degenerate interval");
  }
  double d = lon_b - lon_a;
  if (d <= 0.0) d += kTwoPi;
  return d;
}

double great_circle_distance(const SphericalPoint& a, const SphericalPoint& b) {
  const Eigen::Vector3d u = to_unit_vector(a);
  const Eigen::Vector3d v = to_unit_vector(b);
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

}  // namespace hners
