#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace uldpack {

using Coord = std::int64_t;
using Vec3 = std::array<Coord, 3>;
using Vec3d = std::array<double, 3>;

inline constexpr int kX = 0;
inline constexpr int kY = 1;
inline constexpr int kZ = 2;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Coord dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b);

// Axis-aligned box given by its min corner and its extent.
struct Box {
  Vec3 pos{};
  Vec3 size{};

  Vec3 end() const { return pos + size; }
  Coord volume() const { return size[0] * size[1] * size[2]; }
  Coord footprint_area() const { return size[0] * size[1]; }
};

// Half-space n.x >= a, n pointing into the ULD.
struct FacetPlane {
  Vec3 normal{};
  Coord offset = 0;
  bool tilted = false;

  bool contains(const Vec3& p) const { return dot(normal, p) >= offset; }
  bool on_plane(const Vec3& p) const { return dot(normal, p) == offset; }
  // Index of the nonzero normal component for axis-parallel planes, -1 otherwise.
  int axis() const;
};

// Plane through three points with an integer normal reduced by its gcd.
// Orientation is arbitrary; callers flip it inward.
FacetPlane plane_through(const Vec3& a, const Vec3& b, const Vec3& c);

bool fits_bounding_box(const Vec3& position, const Vec3& size, const Vec3& bbox);

// Evaluates the corner minimising n.corner. Requires plane.tilted.
bool inside_tilted_facet(const Vec3& position, const Vec3& size, const FacetPlane& plane);

// Corner of the box with the smallest value of n.corner.
Vec3 critical_corner(const Vec3& position, const Vec3& size, const FacetPlane& plane);

std::array<Vec3, 8> box_corners(const Box& b);

// Interval overlap length of [a0,a1) and [b0,b1), clipped at 0.
inline Coord interval_overlap(Coord a0, Coord a1, Coord b0, Coord b1) {
  const Coord lo = a0 > b0 ? a0 : b0;
  const Coord hi = a1 < b1 ? a1 : b1;
  return hi > lo ? hi - lo : 0;
}

Coord base_area_overlap(const Box& a, const Box& b);
Coord triple_base_area_overlap(const Box& a, const Box& b, const Box& c);

// Open-box intersection; touching faces do not collide.
bool collides(const Box& a, const Box& b);

}  // namespace uldpack
