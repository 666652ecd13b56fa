#include "uldpack/extreme_points.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace uldpack {

namespace {

Coord floor_div(Coord num, Coord den) {
  Coord q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Coord ceil_div(Coord num, Coord den) { return -floor_div(-num, den); }

// Lowest coordinate along d reachable from p inside the ULD.
Coord wall_coordinate(const Vec3& p, int d, const Uld& uld) {
  Coord t = 0;
  for (const FacetPlane& f : uld.tilted_planes) {
    if (f.normal[d] <= 0) continue;
    Coord rest = 0;
    for (int k = 0; k < 3; ++k)
      if (k != d) rest += f.normal[k] * p[k];
    t = std::max(t, ceil_div(f.offset - rest, f.normal[d]));
  }
  return t;
}

}  // namespace

bool EpStore::insert(const ExtremePoint& p) {
  const bool fresh = points_.insert(p.coords).second;
  if (p.movable) movable_.insert(p.coords);
  return fresh;
}

bool EpStore::is_movable(const Vec3& c) const { return movable_.count(c) > 0; }

std::vector<ExtremePoint> EpStore::ordered() const {
  std::vector<ExtremePoint> out;
  out.reserve(points_.size());
  for (const Vec3& c : points_) out.push_back({c, is_movable(c)});
  return out;
}

std::optional<ExtremePoint> EpStore::next_point(const std::optional<Vec3>& after) const {
  auto it = after ? points_.upper_bound(*after) : points_.begin();
  if (it == points_.end()) return std::nullopt;
  return ExtremePoint{*it, is_movable(*it)};
}

EpStore init_store(std::array<int, 3> order) {
  EpStore s(order);
  s.insert({{0, 0, 0}, false});
  return s;
}

bool on_movable_facet(const Uld& uld, const Vec3& p) {
  for (const FacetPlane& f : uld.planes) {
    if (f.normal[0] == 0 && f.normal[1] > 0 && f.normal[2] <= 0 && f.on_plane(p)) return true;
  }
  return false;
}

bool is_critical_facet(const FacetPlane& f) { return f.normal[0] == 0 && f.normal[1] > 0 && f.normal[2] < 0; }

double move_offset(const Vec3& e, Coord s3, const FacetPlane& f) {
  const Coord num = f.offset - f.normal[1] * e[1] - f.normal[2] * (e[2] + s3);
  return static_cast<double>(num) / static_cast<double>(f.normal[1]);
}

Vec3d move_point_exact(const Vec3& e, Coord s3, const FacetPlane& f) {
  const double nu = move_offset(e, s3, f);
  Vec3d out{static_cast<double>(e[0]), static_cast<double>(e[1]), static_cast<double>(e[2])};
  if (nu > 0) out[1] += nu;
  return out;
}

Vec3 move_point(const ExtremePoint& e, const Vec3& size, const Uld& uld) {
  if (!e.movable) return e.coords;
  Coord best = 0;
  for (const FacetPlane& f : uld.tilted_planes) {
    if (!is_critical_facet(f)) continue;
    const Coord num = f.offset - f.normal[1] * e.coords[1] - f.normal[2] * (e.coords[2] + size[2]);
    best = std::max(best, ceil_div(num, f.normal[1]));
  }
  Vec3 out = e.coords;
  out[1] += best;
  return out;
}

std::vector<ExtremePoint> project(const Vec3& p, int d, std::span<const Placement> loaded, const Uld& uld,
                                  const ProjectionOptions& opt) {
  const int th = (d + 1) % 3;
  const int et = (d + 2) % 3;
  std::vector<std::size_t> order(loaded.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return loaded[a].end_position()[d] > loaded[b].end_position()[d];
  });

  std::vector<ExtremePoint> out;
  std::vector<const Placement*> blocking;
  const auto emit = [&](const Vec3& e) {
    if (uld.contains_point(e)) out.push_back({e, on_movable_facet(uld, e)});
  };
  for (std::size_t idx : order) {
    const Placement& l = loaded[idx];
    const Vec3 c = l.position;
    const Vec3 end = l.end_position();
    if (c[d] >= p[d] || end[th] <= p[th] || end[et] <= p[et]) continue;
    const bool hit = p[th] >= c[th] && p[et] >= c[et];
    if (!opt.surface_extension) {
      if (!hit) continue;
      if (end[d] <= p[d] && (d != kZ || l.stackable)) {
        Vec3 e = p;
        e[d] = end[d];
        emit(e);
      }
      return out;
    }
    if (opt.blocking) {
      const bool blocked = std::any_of(blocking.begin(), blocking.end(), [&](const Placement* b) {
        return (c[th] >= b->position[th] || p[th] >= b->position[th]) &&
               (c[et] >= b->position[et] || p[et] >= b->position[et]);
      });
      if (blocked) continue;
    }
    if (end[d] <= p[d] && (d != kZ || l.stackable)) {
      Vec3 e = p;
      e[d] = end[d];
      emit(e);
    }
    if (hit) return out;
    blocking.push_back(&l);
  }
  Vec3 e = p;
  e[d] = wall_coordinate(p, d, uld);
  emit(e);
  return out;
}

std::vector<ExtremePoint> generate_new_points(std::span<const Placement> loaded, const Placement& added,
                                              const Uld& uld, const Variants& variants) {
  ProjectionOptions opt;
  opt.blocking = !variants.no_blocking && !variants.crainic_mimic;
  opt.surface_extension = !variants.crainic_mimic;
  std::vector<ExtremePoint> out;
  for (int j = 0; j < 3; ++j) {
    if (!added.stackable && j == kZ) continue;
    for (int d = 0; d < 3; ++d) {
      if (d == j) continue;
      Vec3 p = added.position;
      p[j] += added.size[j];
      if (!variants.crainic_mimic) p[d] += added.size[d];
      for (const ExtremePoint& e : project(p, d, loaded, uld, opt)) out.push_back(e);
    }
  }
  if (added.stackable && !variants.crainic_mimic) {
    const Vec3 top{added.position[0], added.position[1], added.position[2] + added.size[2]};
    if (uld.contains_point(top)) out.push_back({top, on_movable_facet(uld, top)});
  }
  std::sort(out.begin(), out.end(), [](const ExtremePoint& a, const ExtremePoint& b) { return a.coords < b.coords; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ExtremePoint& a, const ExtremePoint& b) { return a.coords == b.coords; }),
            out.end());
  return out;
}

}  // namespace uldpack
