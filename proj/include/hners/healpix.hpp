#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hners/equirect.hpp"  // GridNode
#include "hners/sphere.hpp"

namespace hners {

/// HEALPix ring-scheme resolution. n_side is a power of two; the level
/// schedule is n_side = 2^(level-1).
struct HealpixSpec {
  int n_side = 1;
  int level = 1;
};

bool is_power_of_two(int v);

/// 12 * n_side^2. Throws for non-power-of-two n_side.
std::int64_t n_pix(int n_side);

HealpixSpec healpix_spec_for_level(int level);

/// One isolatitude ring, indexed 1..4*n_side-1 from the North pole.
/// Pixels within a ring are ordered by ascending center longitude; local
/// pixel 0 has the smallest center longitude in [0, 2*pi).
struct RingLayout {
  int ring = 0;         // 1-based index from the North
  int count = 0;        // pixels on this ring
  double z = 0.0;       // sin(latitude) of the ring
  double first_lon = 0.0;
  double lon_step = 0.0;
  std::int64_t offset = 0;  // global index of local pixel 0

  double center_lon(int local) const { return first_lon + lon_step * local; }
};

RingLayout ring_layout(int n_side, int ring);

/// Global pixel index -> ring-ordered center position.
SphericalPoint pixel_center(int n_side, std::int64_t pix);

/// Ring of a global pixel index plus the local index within it.
std::array<std::int64_t, 2> pixel_ring(int n_side, std::int64_t pix);

/// Index of the pixel whose center is nearest to p (great-circle metric),
/// resolved in O(1) from the two rings bracketing p's latitude.
std::int64_t ang2pix(int n_side, const SphericalPoint& p);

/// Four neighbors as two isolatitude pairs: first the two pixels on the ring
/// at-or-above p's latitude bracketing p's longitude, then the two on the
/// ring below. Poleward of the outermost ring both pairs come from that ring
/// (degenerate latitude interval).
std::array<GridNode, 4> healpix_neighborhood(const HealpixSpec& spec,
                                             const SphericalPoint& p);

/// Face-coordinate decomposition of a ring-scheme pixel: base diamond
/// 0..11 and within-face coordinates in [0, n_side)^2. The inverse of
/// xyf_to_ring_pix. Parents and children across resolutions share face
/// coordinates up to scaling, which is what the downsampling code relies on.
struct FaceCoord {
  int face = 0;
  int ix = 0;
  int iy = 0;
};

FaceCoord ring_pix_to_xyf(int n_side, std::int64_t pix);
std::int64_t xyf_to_ring_pix(int n_side, const FaceCoord& c);

/// The factor^2 pixels at n_side*factor that subdivide `pix` at n_side.
std::vector<std::int64_t> child_pixels(int n_side, std::int64_t pix,
                                       int factor);

}  // namespace hners
