#include "hners/healpix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hners/errors.hpp"

namespace hners {

namespace {

// Ring multipliers of the 12 base diamonds: north faces 0-3, equatorial 4-7,
// south 8-11.
constexpr int kJrll[12] = {2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4};
constexpr int kJpll[12] = {1, 3, 5, 7, 0, 2, 4, 6, 1, 3, 5, 7};

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

double ring_z(int n_side, int ring) {
  const int n = n_side;
  if (ring < n) {  // north polar cap
    return 1.0 - static_cast<double>(ring) * ring / (3.0 * n * n);
  }
  if (ring <= 3 * n) {  // equatorial belt
    return 4.0 / 3.0 - 2.0 * ring / (3.0 * n);
  }
  const int rs = 4 * n - ring;  // south polar cap, mirrored
  return -(1.0 - static_cast<double>(rs) * rs / (3.0 * n * n));
}

// Largest ring index whose z is >= the query z; 0 when the query lies
// poleward of ring 1.
int ring_above_or_at(int n_side, double z) {
  const int n_line = 4 * n_side - 1;
  int i;
  if (z > 2.0 / 3.0) {
    i = static_cast<int>(std::floor(
        std::sqrt(3.0 * n_side * n_side * (1.0 - z))));
  } else if (z >= -2.0 / 3.0) {
    i = static_cast<int>(std::floor((4.0 / 3.0 - z) * 1.5 * n_side));
  } else {
    i = 4 * n_side - static_cast<int>(std::ceil(
        std::sqrt(3.0 * n_side * n_side * (1.0 + z))));
  }
  i = std::clamp(i, 0, n_line);
  while (i >= 1 && ring_z(n_side, i) < z) --i;
  while (i < n_line && ring_z(n_side, i + 1) >= z) ++i;
  return i;
}

// Two ring-local pixel indices whose center longitudes bracket lon.
std::array<int, 2> bracket_in_ring(const RingLayout& ring, double lon) {
  const double u = (lon - ring.first_lon) / ring.lon_step;
  int k = static_cast<int>(std::floor(u));
  k %= ring.count;
  if (k < 0) k += ring.count;
  return {k, (k + 1) % ring.count};
}

}  // namespace

bool is_power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }

std::int64_t n_pix(int n_side) {
  if (!is_power_of_two(n_side)) {
    throw ConfigError("n_pix: n_side must be a power of two, got " +
                      std::to_string(n_side));
  }
  return 12LL * n_side * n_side;
}

HealpixSpec healpix_spec_for_level(int level) {
  if (level < 1 || level > 30) {
    throw ConfigError("healpix level must be in [1, 30]");
  }
  return HealpixSpec{1 << (level - 1), level};
}

RingLayout ring_layout(int n_side, int ring) {
  const std::int64_t npix = n_pix(n_side);
  const int n_line = 4 * n_side - 1;
  if (ring < 1 || ring > n_line) {
    throw IndexError("ring_layout: ring " + std::to_string(ring) +
                     " outside [1, " + std::to_string(n_line) + "]");
  }
  RingLayout out;
  out.ring = ring;
  out.z = ring_z(n_side, ring);
  if (ring < n_side) {  // north cap
    out.count = 4 * ring;
    out.first_lon = kPi / (4.0 * ring);
    out.offset = 2LL * ring * (ring - 1);
  } else if (ring <= 3 * n_side) {  // belt
    const int s = (ring - n_side + 1) & 1;
    out.count = 4 * n_side;
    out.first_lon = (s == 1) ? kPi / (4.0 * n_side) : 0.0;
    out.offset = 2LL * n_side * (n_side - 1) +
                 static_cast<std::int64_t>(ring - n_side) * 4 * n_side;
  } else {  // south cap
    const int rs = 4 * n_side - ring;
    out.count = 4 * rs;
    out.first_lon = kPi / (4.0 * rs);
    out.offset = npix - 2LL * rs * (rs + 1);
  }
  out.lon_step = kTwoPi / out.count;
  return out;
}

std::array<std::int64_t, 2> pixel_ring(int n_side, std::int64_t pix) {
  const std::int64_t npix = n_pix(n_side);
  if (pix < 0 || pix >= npix) {
    throw IndexError("pixel index " + std::to_string(pix) + " outside [0, " +
                     std::to_string(npix) + ")");
  }
  const std::int64_t ncap = 2LL * n_side * (n_side - 1);
  std::int64_t ring;
  if (pix < ncap) {
    ring = (1 + isqrt(1 + 2 * pix)) >> 1;
  } else if (pix < npix - ncap) {
    ring = (pix - ncap) / (4 * n_side) + n_side;
  } else {
    const std::int64_t ip = npix - pix;
    ring = 4 * n_side - ((1 + isqrt(2 * ip - 1)) >> 1);
  }
  const RingLayout layout = ring_layout(n_side, static_cast<int>(ring));
  return {ring, pix - layout.offset};
}

SphericalPoint pixel_center(int n_side, std::int64_t pix) {
  const auto [ring, local] = pixel_ring(n_side, pix);
  const RingLayout layout = ring_layout(n_side, static_cast<int>(ring));
  const double lat = std::asin(std::clamp(layout.z, -1.0, 1.0));
  return SphericalPoint(lat,
                        wrap_longitude(layout.center_lon(static_cast<int>(local))));
}

std::int64_t ang2pix(int n_side, const SphericalPoint& p) {
  const int n_line = 4 * n_side - 1;
  const double z = std::sin(p.lat);
  const int at = ring_above_or_at(n_side, z);
  int ra, rb;
  if (at == 0) {
    ra = 1;
    rb = std::min(2, n_line);
  } else if (at == n_line) {
    ra = std::max(1, n_line - 1);
    rb = n_line;
  } else {
    ra = at;
    rb = at + 1;
  }

  const Eigen::Vector3d q = to_unit_vector(p);
  std::int64_t best = -1;
  double best_dot = -2.0;
  for (int ring : {ra, rb}) {
    const RingLayout layout = ring_layout(n_side, ring);
    const auto [k1, k2] = bracket_in_ring(layout, p.lon);
    for (int k : {k1, k2}) {
      const std::int64_t pix = layout.offset + k;
      const double d = q.dot(to_unit_vector(pixel_center(n_side, pix)));
      if (d > best_dot || (d == best_dot && pix < best)) {
        best_dot = d;
        best = pix;
      }
    }
    if (ra == rb) break;
  }
  return best;
}

std::array<GridNode, 4> healpix_neighborhood(const HealpixSpec& spec,
                                             const SphericalPoint& p) {
  const int n_side = spec.n_side;
  const int n_line = 4 * n_side - 1;
  const double z = std::sin(p.lat);
  const int at = ring_above_or_at(n_side, z);

  int upper, lower;
  if (at == 0) {  // poleward of ring 1
    upper = lower = 1;
  } else if (at == n_line) {  // at or poleward of the last ring
    upper = lower = n_line;
  } else {
    upper = at;
    lower = at + 1;
  }

  std::array<GridNode, 4> out;
  int slot = 0;
  for (int ring : {upper, lower}) {
    const RingLayout layout = ring_layout(n_side, ring);
    const double lat = std::asin(std::clamp(layout.z, -1.0, 1.0));
    const auto [k1, k2] = bracket_in_ring(layout, p.lon);
    for (int k : {k1, k2}) {
      out[slot].id = layout.offset + k;
      out[slot].pos = SphericalPoint(lat, wrap_longitude(layout.center_lon(k)));
      ++slot;
    }
  }
  return out;
}

FaceCoord ring_pix_to_xyf(int n_side, std::int64_t pix) {
  const std::int64_t npix = n_pix(n_side);
  if (pix < 0 || pix >= npix) {
    throw IndexError("ring_pix_to_xyf: pixel out of range");
  }
  const std::int64_t ncap = 2LL * n_side * (n_side - 1);
  std::int64_t iring, iphi, kshift, nr;
  int face;
  if (pix < ncap) {  // north cap
    iring = (1 + isqrt(1 + 2 * pix)) >> 1;
    iphi = pix + 1 - 2 * iring * (iring - 1);
    kshift = 0;
    nr = iring;
    face = static_cast<int>((iphi - 1) / iring);
  } else if (pix < npix - ncap) {  // belt
    const std::int64_t ip = pix - ncap;
    iring = ip / (4 * n_side) + n_side;
    iphi = ip % (4 * n_side) + 1;
    kshift = (iring + n_side) & 1;
    nr = n_side;
    const std::int64_t ire = iring - n_side + 1;
    const std::int64_t irm = 2 * n_side + 2 - ire;
    const std::int64_t ifm = (iphi - ire / 2 + n_side - 1) / n_side;
    const std::int64_t ifp = (iphi - irm / 2 + n_side - 1) / n_side;
    face = static_cast<int>(
        (ifp == ifm) ? (ifp | 4) : ((ifp < ifm) ? ifp : (ifm + 8)));
  } else {  // south cap
    const std::int64_t ip = npix - pix;
    const std::int64_t irs = (1 + isqrt(2 * ip - 1)) >> 1;
    iphi = 4 * irs + 1 - (ip - 2 * irs * (irs - 1));
    kshift = 0;
    nr = irs;
    face = static_cast<int>(8 + (iphi - 1) / irs);
    iring = 4 * n_side - irs;
  }
  const std::int64_t irt = iring - kJrll[face] * static_cast<std::int64_t>(n_side) + 1;
  std::int64_t ipt = 2 * iphi - kJpll[face] * nr - kshift - 1;
  if (ipt >= 2 * n_side) ipt -= 8 * n_side;
  FaceCoord out;
  out.face = face;
  out.ix = static_cast<int>((ipt - irt) >> 1);
  out.iy = static_cast<int>((-(ipt + irt)) >> 1);
  return out;
}

std::int64_t xyf_to_ring_pix(int n_side, const FaceCoord& c) {
  if (c.face < 0 || c.face > 11 || c.ix < 0 || c.ix >= n_side || c.iy < 0 ||
      c.iy >= n_side) {
    throw IndexError("xyf_to_ring_pix: face coordinate out of range");
  }
  const std::int64_t npix = n_pix(n_side);
  const std::int64_t ncap = 2LL * n_side * (n_side - 1);
  const std::int64_t jr =
      kJrll[c.face] * static_cast<std::int64_t>(n_side) - c.ix - c.iy - 1;

  std::int64_t nr, n_before, kshift;
  if (jr < n_side) {  // north cap
    nr = jr;
    n_before = 2 * nr * (nr - 1);
    kshift = 0;
  } else if (jr > 3 * n_side) {  // south cap
    nr = 4 * n_side - jr;
    n_before = npix - 2 * nr * (nr + 1);
    kshift = 0;
  } else {  // belt
    nr = n_side;
    n_before = ncap + (jr - n_side) * 4 * n_side;
    kshift = (jr - n_side) & 1;
  }

  std::int64_t jp = (kJpll[c.face] * nr + c.ix - c.iy + 1 + kshift) / 2;
  while (jp > 4 * nr) jp -= 4 * nr;
  while (jp < 1) jp += 4 * nr;
  return n_before + jp - 1;
}

std::vector<std::int64_t> child_pixels(int n_side, std::int64_t pix,
                                       int factor) {
  if (!is_power_of_two(factor)) {
    throw ConfigError("child_pixels: factor must be a power of two");
  }
  const FaceCoord parent = ring_pix_to_xyf(n_side, pix);
  const int fine = n_side * factor;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(factor) * factor);
  for (int dy = 0; dy < factor; ++dy) {
    for (int dx = 0; dx < factor; ++dx) {
      FaceCoord child{parent.face, parent.ix * factor + dx,
                      parent.iy * factor + dy};
      out.push_back(xyf_to_ring_pix(fine, child));
    }
  }
  return out;
}

}  // namespace hners
