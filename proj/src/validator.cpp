#include "uldpack/validator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace uldpack {

bool ValidationReport::feasible() const { return hard_count() == 0; }

bool ValidationReport::cog_ok() const {
  return std::none_of(violations.begin(), violations.end(), [](const Violation& v) { return v.kind == "cog"; });
}

std::size_t ValidationReport::hard_count() const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [](const Violation& v) { return v.hard; }));
}

namespace {

bool open_overlap(Coord a0, Coord a1, Coord b0, Coord b1) { return a0 < b1 && b0 < a1; }

bool boxes_intersect(const Box& a, const Box& b) {
  for (int d = 0; d < 3; ++d)
    if (!open_overlap(a.pos[d], a.pos[d] + a.size[d], b.pos[d], b.pos[d] + b.size[d])) return false;
  return true;
}

bool footprints_intersect(const Box& a, const Box& b) {
  return open_overlap(a.pos[0], a.pos[0] + a.size[0], b.pos[0], b.pos[0] + b.size[0]) &&
         open_overlap(a.pos[1], a.pos[1] + a.size[1], b.pos[1], b.pos[1] + b.size[1]);
}

struct Obstacle {
  Box box;
  bool stackable;
  bool dummy;
};

// Blocker geometry rebuilt from the ULD description.
std::vector<Obstacle> rebuild_blockers(const Uld& uld, bool substructure) {
  std::vector<Obstacle> out;
  const Coord e = uld.edge_width, delta = uld.edge_offset;
  const Vec3& b = uld.bounding_box;
  if (e > 0 && delta > 0) {
    const Coord h = delta > 1 ? delta - 1 : 1;
    out.push_back({{{0, 0, 0}, {b[0], e, h}}, false, true});
    out.push_back({{{0, b[1] - e, 0}, {b[0], e, h}}, false, true});
    out.push_back({{{0, 0, 0}, {e, b[1], h}}, false, true});
    out.push_back({{{b[0] - e, 0, 0}, {e, b[1], h}}, false, true});
  }
  if (substructure && delta > 0) out.push_back({{{e, e, 0}, {b[0] - 2 * e, b[1] - 2 * e, delta}}, true, true});
  return out;
}

std::string describe(const Placement& p, const std::vector<Item>& items) {
  if (p.item < items.size()) return items[p.item].id;
  return p.label.empty() ? std::string("dummy") : p.label;
}

}  // namespace

Coord exact_supported_area(std::span<const SurfaceBox> surfaces, const Vec3& bbox, const Box& cand,
                           Coord padding) {
  const Coord z = cand.pos[2];
  std::vector<const SurfaceBox*> rel;
  for (const SurfaceBox& s : surfaces) {
    const Coord top = s.box.pos[2] + s.box.size[2];
    if (top >= z - padding && top <= z && footprints_intersect(s.box, cand)) rel.push_back(&s);
  }
  const bool floor_counts = z <= padding;
  std::vector<Coord> xs{cand.pos[0], cand.pos[0] + cand.size[0]};
  std::vector<Coord> ys{cand.pos[1], cand.pos[1] + cand.size[1]};
  for (const SurfaceBox* s : rel) {
    for (Coord v : {s->box.pos[0], s->box.pos[0] + s->box.size[0]})
      if (v > cand.pos[0] && v < cand.pos[0] + cand.size[0]) xs.push_back(v);
    for (Coord v : {s->box.pos[1], s->box.pos[1] + s->box.size[1]})
      if (v > cand.pos[1] && v < cand.pos[1] + cand.size[1]) ys.push_back(v);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  Coord area = 0;
  for (std::size_t a = 0; a + 1 < xs.size(); ++a) {
    for (std::size_t c = 0; c + 1 < ys.size(); ++c) {
      const Coord mx = xs[a], my = ys[c];
      Coord best_top = -1;
      bool best_stack = false;
      if (floor_counts && mx >= 0 && mx < bbox[0] && my >= 0 && my < bbox[1]) {
        best_top = 0;
        best_stack = true;
      }
      for (const SurfaceBox* s : rel) {
        const Box& b = s->box;
        if (mx < b.pos[0] || mx >= b.pos[0] + b.size[0] || my < b.pos[1] || my >= b.pos[1] + b.size[1]) continue;
        const Coord top = b.pos[2] + b.size[2];
        if (top > best_top || (top == best_top && !s->stackable)) {
          best_top = top;
          best_stack = s->stackable;
        }
      }
      if (best_top >= 0 && best_stack) area += (xs[a + 1] - xs[a]) * (ys[c + 1] - ys[c]);
    }
  }
  return area;
}

ValidationReport validate_load(const UldLoad& load, const Uld& uld, const std::vector<Item>& items,
                               const PackingParams& params, std::size_t li) {
  ValidationReport rep;
  const auto add = [&](const char* kind, std::size_t idx, std::string detail, bool hard = true) {
    rep.violations.push_back({kind, std::move(detail), hard, li, idx});
  };

  std::vector<std::size_t> real;
  for (std::size_t i = 0; i < load.placements.size(); ++i)
    if (!load.placements[i].dummy) real.push_back(i);

  std::vector<Obstacle> blockers = rebuild_blockers(uld, load.substructure_used);
  if (load.substructure_used && !uld.substructure_allowed) add("substructure", 0, "substructure not allowed");

  std::int64_t weight = 0;
  Coord volume = 0;
  for (std::size_t i : real) {
    const Placement& p = load.placements[i];
    const std::string name = describe(p, items);
    if (p.item >= items.size()) {
      add("item", i, "placement refers to an unknown item");
      continue;
    }
    const Item& it = items[p.item];
    if (!is_admissible(it, p.orientation)) add("orientation", i, name + ": orientation not admissible");
    if (oriented_size(it.size, p.orientation) != p.size) add("orientation", i, name + ": size does not match orientation");
    weight += it.weight;
    volume += p.volume();
    for (int d = 0; d < 3; ++d)
      if (p.size[d] <= 0) add("size", i, name + ": non-positive extent");
    for (const Vec3& c : box_corners(p.box())) {
      bool inside = true;
      for (const FacetPlane& f : uld.planes)
        inside = inside && (f.normal[0] * c[0] + f.normal[1] * c[1] + f.normal[2] * c[2] >= f.offset);
      if (!inside) {
        add("containment", i, name + ": corner outside the ULD");
        break;
      }
    }
    const Coord e = uld.edge_width;
    if (e > 0 && uld.edge_offset > 0) {
      const Vec3 s = p.position, t = p.end_position();
      const bool on_edge = s[0] < e || s[1] < e || t[0] > uld.bounding_box[0] - e || t[1] > uld.bounding_box[1] - e;
      if (on_edge && s[2] < uld.edge_offset) add("edge", i, name + ": footprint over the edge zone below the edge offset");
    }
  }

  for (std::size_t a = 0; a < real.size(); ++a) {
    const Box ba = load.placements[real[a]].box();
    for (std::size_t b = a + 1; b < real.size(); ++b)
      if (boxes_intersect(ba, load.placements[real[b]].box()))
        add("collision", real[a],
            describe(load.placements[real[a]], items) + " overlaps " + describe(load.placements[real[b]], items));
    for (const Obstacle& o : blockers)
      if (boxes_intersect(ba, o.box)) add("collision", real[a], describe(load.placements[real[a]], items) + " overlaps a blocker");
  }

  std::vector<SurfaceBox> surfaces;
  for (std::size_t i : real) surfaces.push_back({load.placements[i].box(), load.placements[i].stackable});
  for (const Obstacle& o : blockers) surfaces.push_back({o.box, o.stackable});
  for (std::size_t k = 0; k < real.size(); ++k) {
    const Placement& p = load.placements[real[k]];
    const Box cand = p.box();
    const Coord z = cand.pos[2];
    const std::string name = describe(p, items);
    std::vector<SurfaceBox> others;
    bool direct = z == 0;
    std::array<bool, 4> corner{};
    if (z == 0) corner = {true, true, true, true};
    const std::array<std::array<Coord, 2>, 4> cs{{{cand.pos[0], cand.pos[1]},
                                                   {cand.pos[0] + cand.size[0], cand.pos[1]},
                                                   {cand.pos[0], cand.pos[1] + cand.size[1]},
                                                   {cand.pos[0] + cand.size[0], cand.pos[1] + cand.size[1]}}};
    for (std::size_t j = 0; j < surfaces.size(); ++j) {
      if (j == k) continue;
      const SurfaceBox& s = surfaces[j];
      others.push_back(s);
      if (s.box.pos[2] + s.box.size[2] != z) continue;
      if (footprints_intersect(s.box, cand)) {
        if (!s.stackable)
          add("stacking", real[k], name + " rests on a non-stackable item");
        else
          direct = true;
      }
      if (!s.stackable) continue;
      for (int c = 0; c < 4; ++c)
        if (cs[c][0] >= s.box.pos[0] && cs[c][0] <= s.box.pos[0] + s.box.size[0] && cs[c][1] >= s.box.pos[1] &&
            cs[c][1] <= s.box.pos[1] + s.box.size[1])
          corner[c] = true;
    }
    const bool four = corner[0] && corner[1] && corner[2] && corner[3];
    bool ok = four;
    if (params.corner_support_mode == CornerSupportMode::full && !ok) {
      const Coord area = exact_supported_area(others, uld.bounding_box, cand, params.max_padding_height);
      const double need = params.min_item_overlap * static_cast<double>(cand.footprint_area());
      ok = direct && static_cast<double>(area) >= need - 1e-9 * need;
    }
    if (!ok) add("support", real[k], name + " is not sufficiently supported");
  }

  if (weight > uld.weight_capacity) add("weight", 0, "weight capacity exceeded");
  if (volume > uld.volume_capacity) add("volume", 0, "volume capacity exceeded");

  if (const auto cog = load.center_of_gravity()) {
    for (int d = 0; d < 2; ++d) {
      const double half = static_cast<double>(uld.bounding_box[d]) / 2.0;
      const double dev = std::abs(((*cog)[d] - half) / half);
      if (dev > params.max_cog_deviation + 1e-12)
        add("cog", 0, std::string("centre of gravity deviates along ") + (d == 0 ? "x" : "y"), false);
    }
  }
  return rep;
}

ValidationReport validate_solution(const Solution& sol, const std::vector<UldGroup>& groups,
                                   const std::vector<Item>& items, const PackingParams& params) {
  ValidationReport rep;
  std::vector<int> seen(items.size(), 0);
  std::map<std::size_t, std::int64_t> used;
  for (std::size_t li = 0; li < sol.loads.size(); ++li) {
    const UldLoad& load = sol.loads[li];
    if (load.uld >= groups.size()) {
      rep.violations.push_back({"uld", "load refers to an unknown ULD", true, li, 0});
      continue;
    }
    ++used[load.uld];
    ValidationReport r = validate_load(load, groups[load.uld].uld, items, params, li);
    rep.violations.insert(rep.violations.end(), r.violations.begin(), r.violations.end());
    for (const Placement& p : load.placements)
      if (!p.dummy && p.item < items.size()) ++seen[p.item];
  }
  for (std::size_t i : sol.unloaded)
    if (i < items.size()) ++seen[i];
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (seen[i] != 1)
      rep.violations.push_back({"multiplicity", items[i].id + " appears " + std::to_string(seen[i]) + " times", true, 0, 0});
  }
  for (const auto& [g, n] : used)
    if (groups[g].count && n > *groups[g].count)
      rep.violations.push_back({"availability", "ULD " + groups[g].uld.id + " used too often", true, 0, 0});
  return rep;
}

}  // namespace uldpack
