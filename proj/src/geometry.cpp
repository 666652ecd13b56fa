#include "uldpack/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace uldpack {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

int FacetPlane::axis() const {
  int found = -1;
  for (int d = 0; d < 3; ++d) {
    if (normal[d] == 0) continue;
    if (found >= 0) return -1;
    found = d;
  }
  return found;
}

FacetPlane plane_through(const Vec3& a, const Vec3& b, const Vec3& c) {
  Vec3 n = cross(b - a, c - a);
  const Coord g = std::gcd(std::gcd(n[0], n[1]), n[2]);
  if (g == 0) throw std::invalid_argument("plane_through: collinear points");
  for (auto& v : n) v /= g;
  FacetPlane p;
  p.normal = n;
  p.offset = dot(n, a);
  p.tilted = p.axis() < 0;
  return p;
}

bool fits_bounding_box(const Vec3& position, const Vec3& size, const Vec3& bbox) {
  for (int d = 0; d < 3; ++d)
    if (position[d] + size[d] > bbox[d]) return false;
  return true;
}

Vec3 critical_corner(const Vec3& position, const Vec3& size, const FacetPlane& plane) {
  Vec3 c = position;
  for (int d = 0; d < 3; ++d)
    if (plane.normal[d] < 0) c[d] += size[d];
  return c;
}

bool inside_tilted_facet(const Vec3& position, const Vec3& size, const FacetPlane& plane) {
  return plane.contains(critical_corner(position, size, plane));
}

std::array<Vec3, 8> box_corners(const Box& b) {
  std::array<Vec3, 8> out{};
  for (int m = 0; m < 8; ++m)
    for (int d = 0; d < 3; ++d) out[m][d] = b.pos[d] + (((m >> d) & 1) ? b.size[d] : 0);
  return out;
}

Coord base_area_overlap(const Box& a, const Box& b) {
  const Coord ox = interval_overlap(a.pos[0], a.pos[0] + a.size[0], b.pos[0], b.pos[0] + b.size[0]);
  if (ox == 0) return 0;
  return ox * interval_overlap(a.pos[1], a.pos[1] + a.size[1], b.pos[1], b.pos[1] + b.size[1]);
}

Coord triple_base_area_overlap(const Box& a, const Box& b, const Box& c) {
  Coord area = 1;
  for (int d = 0; d < 2; ++d) {
    const Coord lo = std::max({a.pos[d], b.pos[d], c.pos[d]});
    const Coord hi = std::min({a.pos[d] + a.size[d], b.pos[d] + b.size[d], c.pos[d] + c.size[d]});
    if (hi <= lo) return 0;
    area *= hi - lo;
  }
  return area;
}

bool collides(const Box& a, const Box& b) {
  for (int d = 0; d < 3; ++d) {
    if (!(b.pos[d] < a.pos[d] + a.size[d] && a.pos[d] < b.pos[d] + b.size[d])) return false;
  }
  return true;
}

}  // namespace uldpack
