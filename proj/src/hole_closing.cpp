#include "uldpack/hole_closing.hpp"

#include <algorithm>
#include <limits>

#include "uldpack/feasibility.hpp"

namespace uldpack {

namespace {

int other_axis(int axis) { return axis == kX ? kY : kX; }

bool overlaps_open(Coord a0, Coord a1, Coord b0, Coord b1) { return a0 < b1 && b0 < a1; }

Box bounding_box_of(const UldLoad& load, const std::vector<std::size_t>& q) {
  Vec3 lo = load.placements[q.front()].position;
  Vec3 hi = load.placements[q.front()].end_position();
  for (std::size_t i : q) {
    const Placement& p = load.placements[i];
    for (int d = 0; d < 3; ++d) {
      lo[d] = std::min(lo[d], p.position[d]);
      hi[d] = std::max(hi[d], p.end_position()[d]);
    }
  }
  return {lo, hi - lo};
}

}  // namespace

int centerward_sign(const Placement& p, const Uld& uld, int axis) {
  // Compare doubled coordinates to stay in integers.
  return 2 * p.position[axis] + p.size[axis] < uld.bounding_box[axis] ? 1 : -1;
}

bool has_hole(const UldLoad& load, const Uld& uld, std::size_t idx, int axis) {
  const Placement& p = load.placements[idx];
  const int sign = centerward_sign(p, uld, axis);
  Box strip = p.box();
  strip.size[axis] = 1;
  strip.pos[axis] = sign > 0 ? p.end_position()[axis] : p.position[axis] - 1;
  if (strip.pos[axis] < 0 || strip.pos[axis] + 1 > uld.bounding_box[axis]) return false;
  for (std::size_t k = 0; k < load.placements.size(); ++k)
    if (k != idx && collides(load.placements[k].box(), strip)) return false;
  const int o = other_axis(axis);
  for (std::size_t k = 0; k < load.placements.size(); ++k) {
    const Placement& b = load.placements[k];
    if (k == idx || b.dummy) continue;
    if (!overlaps_open(b.position[o], b.end_position()[o], p.position[o], p.end_position()[o])) continue;
    if (!overlaps_open(b.position[kZ], b.end_position()[kZ], p.position[kZ], p.end_position()[kZ])) continue;
    if (sign > 0 ? b.position[axis] >= p.end_position()[axis] : b.end_position()[axis] <= p.position[axis])
      return true;
  }
  return false;
}

std::vector<Hole> find_holes(const UldLoad& load, const Uld& uld) {
  std::vector<Hole> out;
  for (std::size_t i = 0; i < load.placements.size(); ++i) {
    if (load.placements[i].dummy) continue;
    for (int axis : {kX, kY})
      if (has_hole(load, uld, i, axis)) out.push_back({i, axis, centerward_sign(load.placements[i], uld, axis)});
  }
  return out;
}

std::vector<std::size_t> movable_set(const UldLoad& load, std::size_t l, Coord padding) {
  std::vector<std::size_t> q{l};
  std::vector<bool> in(load.placements.size(), false);
  in[l] = true;
  const Coord p3 = load.placements[l].position[kZ];
  for (bool added = true; added;) {
    added = false;
    const Box b = bounding_box_of(load, q);
    const Vec3 bend = b.end();
    for (std::size_t j = 0; j < load.placements.size(); ++j) {
      const Placement& c = load.placements[j];
      if (in[j] || c.dummy) continue;
      const bool intersects = collides(b, c.box());
      const Coord z = c.position[kZ];
      const bool supported = base_area_overlap(b, c.box()) > 0 && z >= bend[kZ] && z <= bend[kZ] + padding;
      if (!intersects && !supported) continue;
      if (z < p3) return {};
      q.push_back(j);
      in[j] = true;
      added = true;
      break;
    }
  }
  std::sort(q.begin(), q.end());
  return q;
}

namespace {

bool shifted_feasible(const UldLoad& load, const Uld& uld, const std::vector<std::size_t>& q,
                      const std::vector<bool>& in_q, int axis, Coord shift, const PackingParams& params) {
  std::vector<Placement> moved = load.placements;
  for (std::size_t i : q) moved[i].position[axis] += shift;
  Box band = bounding_box_of(load, q);
  for (std::size_t i : q) {
    const Placement& m = moved[i];
    if (!fits_uld(uld, m.position, m.size)) return false;
    for (std::size_t k = 0; k < moved.size(); ++k)
      if (!in_q[k] && collides(moved[k].box(), m.box())) return false;
  }
  // Union of the old and new Q region; supports can only change inside it.
  band.size[axis] += shift < 0 ? -shift : shift;
  if (shift < 0) band.pos[axis] += shift;
  const Coord zlo = band.pos[kZ];
  const Coord zhi = band.end()[kZ] + params.max_padding_height;
  std::vector<Placement> others;
  for (std::size_t k = 0; k < moved.size(); ++k) {
    const Placement& m = moved[k];
    if (m.dummy) continue;
    bool check = in_q[k];
    if (!check) {
      const Coord z = m.position[kZ];
      check = z >= zlo && z <= zhi && base_area_overlap(band, m.box()) > 0;
    }
    if (!check) continue;
    others.clear();
    for (std::size_t j = 0; j < moved.size(); ++j)
      if (j != k) others.push_back(moved[j]);
    if (!check_support(others, uld.bounding_box, m.box(), params).verdict) return false;
  }
  return true;
}

}  // namespace

Coord slide(UldLoad& load, const Uld& uld, const std::vector<std::size_t>& q, int axis, int sign,
            const PackingParams& params) {
  if (q.empty()) return 0;
  std::vector<bool> in_q(load.placements.size(), false);
  for (std::size_t i : q) in_q[i] = true;
  Coord limit = std::numeric_limits<Coord>::max();
  for (std::size_t i : q) {
    const Placement& p = load.placements[i];
    limit = std::min(limit, sign > 0 ? uld.bounding_box[axis] - p.end_position()[axis] : p.position[axis]);
    for (std::size_t k = 0; k < load.placements.size(); ++k) {
      if (in_q[k]) continue;
      const Placement& b = load.placements[k];
      bool cross = true;
      for (int d = 0; d < 3; ++d) {
        if (d == axis) continue;
        cross = cross && overlaps_open(b.position[d], b.end_position()[d], p.position[d], p.end_position()[d]);
      }
      if (!cross) continue;
      if (sign > 0 && b.position[axis] >= p.end_position()[axis])
        limit = std::min(limit, b.position[axis] - p.end_position()[axis]);
      if (sign < 0 && b.end_position()[axis] <= p.position[axis])
        limit = std::min(limit, p.position[axis] - b.end_position()[axis]);
    }
  }
  Coord lo = 0, hi = std::max<Coord>(0, limit);
  while (lo < hi) {
    const Coord mid = lo + (hi - lo + 1) / 2;
    if (shifted_feasible(load, uld, q, in_q, axis, sign * mid, params))
      lo = mid;
    else
      hi = mid - 1;
  }
  if (lo > 0)
    for (std::size_t i : q) load.placements[i].position[axis] += sign * lo;
  return lo;
}

int close_holes(UldLoad& load, const Uld& uld, const PackingParams& params, int max_iters) {
  int sweeps = 0;
  while (sweeps < max_iters) {
    ++sweeps;
    bool moved = false;
    for (std::size_t i = 0; i < load.placements.size(); ++i) {
      if (load.placements[i].dummy) continue;
      for (int axis : {kX, kY}) {
        if (!has_hole(load, uld, i, axis)) continue;
        const std::vector<std::size_t> q = movable_set(load, i, params.max_padding_height);
        if (q.empty()) continue;
        if (slide(load, uld, q, axis, centerward_sign(load.placements[i], uld, axis), params) > 0) moved = true;
      }
    }
    if (!moved) break;
  }
  return sweeps;
}

}  // namespace uldpack
