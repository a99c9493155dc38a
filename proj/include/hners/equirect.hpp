#pragma once

#include <array>
#include <cstdint>

#include "hners/sphere.hpp"

namespace hners {

/// One level of the equirectangular feature-grid. n_lat and n_lon count
/// intervals, so the lattice has rows 0..n_lat (row 0 the South pole, row
/// n_lat the North pole) and columns 0..n_lon with column n_lon identified
/// with column 0.
struct EquirectLevelSpec {
  int level = 1;
  int n_lat = 1;
  int n_lon = 2;
};

/// Floor-scaled resolution schedule: floor(gamma^(level-1) * base).
/// gamma must exceed 1.
EquirectLevelSpec level_resolution(int base_lat, int base_lon, double gamma,
                                   int level);

/// Lattice position of row n, column m: lat = pi*(n/n_lat - 1/2),
/// lon = 2*pi*m/n_lon. Requires 0 <= n <= n_lat and 0 <= m < n_lon.
SphericalPoint grid_point_position(const EquirectLevelSpec& spec, int n, int m);

/// Enclosing-cell indices (n, m) with n in [0, n_lat-1], m in [0, n_lon-1].
/// The exact North pole clamps to the top row so the cell always exists.
std::array<int, 2> cell_index(const EquirectLevelSpec& spec,
                              const SphericalPoint& p);

/// Distinct trainable parameters: one per interior lattice point after the
/// meridian merge, plus one per pole.
std::int64_t equirect_param_count(const EquirectLevelSpec& spec);

/// Canonical parameter id for lattice indices (n, m), 0 <= n <= n_lat,
/// 0 <= m <= n_lon. Column n_lon aliases column 0; the pole rows collapse to
/// a single id each: 0 for the South pole, 1 for the North pole, interior
/// ids 2 + (n-1)*n_lon + m.
std::int64_t canonical_param_id(const EquirectLevelSpec& spec, int n, int m);

struct GridNode {
  std::int64_t id = 0;
  SphericalPoint pos;
};

/// The four unit-cell corners enclosing p, ordered (n,m), (n,m+1), (n+1,m),
/// (n+1,m+1): two isolatitude pairs with the lower-latitude pair first.
/// Column m+1 wraps modulo n_lon; pole-row corners share one canonical id.
std::array<GridNode, 4> equirect_neighborhood(const EquirectLevelSpec& spec,
                                              const SphericalPoint& p);

}  // namespace hners
