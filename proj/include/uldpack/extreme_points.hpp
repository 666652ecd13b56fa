#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "uldpack/geometry.hpp"
#include "uldpack/model.hpp"

namespace uldpack {

struct ExtremePoint {
  Vec3 coords{};
  // Lies on a facet from which it may slide away from the origin in y.
  bool movable = false;
};

struct PointOrder {
  std::array<int, 3> axes{kZ, kY, kX};

  bool operator()(const Vec3& a, const Vec3& b) const {
    for (int d : axes) {
      if (a[d] != b[d]) return a[d] < b[d];
    }
    return false;
  }
};

// Ordered, duplicate-free set of candidate points.
class EpStore {
 public:
  explicit EpStore(std::array<int, 3> order = {kZ, kY, kX}) : points_(PointOrder{order}) {}

  // Returns true if the coordinates were new.
  bool insert(const ExtremePoint& p);
  std::size_t size() const { return points_.size(); }
  bool contains(const Vec3& c) const { return points_.count(c) > 0; }
  bool is_movable(const Vec3& c) const;

  // Points in store order. Invalidated by insert.
  std::vector<ExtremePoint> ordered() const;
  // First point strictly after `after` in store order, or the first point.
  std::optional<ExtremePoint> next_point(const std::optional<Vec3>& after) const;

 private:
  std::set<Vec3, PointOrder> points_;
  std::set<Vec3, PointOrder> movable_;
};

EpStore init_store(std::array<int, 3> order = {kZ, kY, kX});

// Facets along which a point at `p` may be moved in +y.
bool on_movable_facet(const Uld& uld, const Vec3& p);
// Tilted facets with n1 = 0, n2 > 0, n3 < 0.
bool is_critical_facet(const FacetPlane& f);

// Exact offset nu for an item of height s3 placed at e against plane f.
double move_offset(const Vec3& e, Coord s3, const FacetPlane& f);
// (e1, e2 + nu, e3) when nu > 0, else e.
Vec3d move_point_exact(const Vec3& e, Coord s3, const FacetPlane& f);
// Integer placement point: the largest ceil(nu) over the ULD's critical facets,
// applied only when positive and the point is movable.
Vec3 move_point(const ExtremePoint& e, const Vec3& size, const Uld& uld);

struct ProjectionOptions {
  bool blocking = true;
  bool surface_extension = true;
};

// Projects p along -axis d against the loaded boxes and the ULD boundary.
std::vector<ExtremePoint> project(const Vec3& p, int d, std::span<const Placement> loaded, const Uld& uld,
                                  const ProjectionOptions& opt = {});

// New points after placement `added` (which must be in `loaded`).
std::vector<ExtremePoint> generate_new_points(std::span<const Placement> loaded, const Placement& added,
                                              const Uld& uld, const Variants& variants = {});

}  // namespace uldpack
