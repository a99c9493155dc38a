#include "hners/equirect.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hners/errors.hpp"

namespace hners {

EquirectLevelSpec level_resolution(int base_lat, int base_lon, double gamma,
                                   int level) {
  if (base_lat < 1 || base_lon < 2) {
    throw ConfigError("level_resolution: base resolution must be >= 1x2");
  }
  if (!(gamma > 1.0)) {
    throw ConfigError("level_resolution: scaling factor must exceed 1");
  }
  if (level < 1) {
    throw ConfigError("level_resolution: level must be >= 1");
  }
  const double scale = std::pow(gamma, level - 1);
  EquirectLevelSpec spec;
  spec.level = level;
  spec.n_lat = static_cast<int>(std::floor(scale * base_lat));
  spec.n_lon = static_cast<int>(std::floor(scale * base_lon));
  return spec;
}

SphericalPoint grid_point_position(const EquirectLevelSpec& spec, int n,
                                   int m) {
  if (n < 0 || n > spec.n_lat || m < 0 || m >= spec.n_lon) {
    throw IndexError("grid_point_position: index (" + std::to_string(n) + "," +
                     std::to_string(m) + ") out of range");
  }
  const double lat =
      kPi * (static_cast<double>(n) / spec.n_lat - 0.5);
  const double lon = kTwoPi * static_cast<double>(m) / spec.n_lon;
  return SphericalPoint(std::clamp(lat, -kHalfPi, kHalfPi), lon);
}

std::array<int, 2> cell_index(const EquirectLevelSpec& spec,
                              const SphericalPoint& p) {
  int n = static_cast<int>(
      std::floor((p.lat / kPi + 0.5) * spec.n_lat));
  int m = static_cast<int>(std::floor(p.lon / kTwoPi * spec.n_lon));
  n = std::clamp(n, 0, spec.n_lat - 1);  // exact North pole lands on n_lat
  m = std::clamp(m, 0, spec.n_lon - 1);
  return {n, m};
}

std::int64_t equirect_param_count(const EquirectLevelSpec& spec) {
  return static_cast<std::int64_t>(spec.n_lat - 1) * spec.n_lon + 2;
}

std::int64_t canonical_param_id(const EquirectLevelSpec& spec, int n, int m) {
  if (n < 0 || n > spec.n_lat || m < 0 || m > spec.n_lon) {
    throw IndexError("canonical_param_id: index (" + std::to_string(n) + "," +
                     std::to_string(m) + ") out of range");
  }
  if (n == 0) return 0;
  if (n == spec.n_lat) return 1;
  const int mm = (m == spec.n_lon) ? 0 : m;
  return 2 + static_cast<std::int64_t>(n - 1) * spec.n_lon + mm;
}

std::array<GridNode, 4> equirect_neighborhood(const EquirectLevelSpec& spec,
                                              const SphericalPoint& p) {
  const auto [n, m] = cell_index(spec, p);
  const int m1 = (m + 1) % spec.n_lon;
  auto node = [&](int row, int col) {
    return GridNode{canonical_param_id(spec, row, col),
                    grid_point_position(spec, row, col)};
  };
  return {node(n, m), node(n, m1), node(n + 1, m), node(n + 1, m1)};
}

}  // namespace hners
