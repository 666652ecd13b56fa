#include "uldpack/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace uldpack {

void validate_item(const Item& item) {
  for (Coord s : item.size)
    if (s < 1) throw ModelError("item " + item.id + ": size components must be >= 1");
  if (item.weight < 0) throw ModelError("item " + item.id + ": negative weight");
  if (item.tiltable && !item.rotatable)
    throw ModelError("item " + item.id + ": tiltable items must be rotatable");
}

const char* to_string(Tilt t) {
  switch (t) {
    case Tilt::none: return "none";
    case Tilt::across_x: return "across_x";
    case Tilt::across_y: return "across_y";
  }
  return "none";
}

Tilt tilt_from_string(const std::string& s) {
  if (s == "none") return Tilt::none;
  if (s == "across_x") return Tilt::across_x;
  if (s == "across_y") return Tilt::across_y;
  throw ModelError("unknown tilt '" + s + "'");
}

bool is_admissible(const Item& item, const Orientation& o) {
  if (o.tilt != Tilt::none && !item.tiltable) return false;
  if (o.rotated && !item.rotatable) return false;
  return true;
}

Vec3 oriented_size(const Vec3& s, const Orientation& o) {
  Vec3 r = s;
  switch (o.tilt) {
    case Tilt::none: break;
    case Tilt::across_x: r = {s[0], s[2], s[1]}; break;
    case Tilt::across_y: r = {s[2], s[1], s[0]}; break;
  }
  if (o.rotated) std::swap(r[0], r[1]);
  return r;
}

Vec3 apply_orientation(const Item& item, const Orientation& o) {
  if (!is_admissible(item, o))
    throw InadmissibleOrientation("orientation not admissible for item " + item.id);
  return oriented_size(item.size, o);
}

std::vector<Orientation> admissible_orientations(const Item& item) {
  std::vector<Orientation> out;
  for (Tilt t : {Tilt::none, Tilt::across_x, Tilt::across_y}) {
    for (bool r : {false, true}) {
      Orientation o{t, r};
      if (is_admissible(item, o)) out.push_back(o);
    }
  }
  return out;
}

bool Uld::contains_point(const Vec3& p) const {
  return std::all_of(planes.begin(), planes.end(), [&](const FacetPlane& f) { return f.contains(p); });
}

bool Uld::contains_box(const Vec3& pos, const Vec3& size) const {
  for (const Vec3& c : box_corners(Box{pos, size}))
    if (!contains_point(c)) return false;
  return true;
}

namespace {

// Right-hand normal of the polygon vertex order.
Vec3 newell_normal(const std::vector<Vec3>& vs, const std::vector<std::size_t>& facet) {
  Vec3 n{0, 0, 0};
  for (std::size_t i = 0; i < facet.size(); ++i) n = n + cross(vs[facet[i]], vs[facet[(i + 1) % facet.size()]]);
  return n;
}

// Reverses facets whose winding points away from the vertex centroid.
void wind_inward(Uld& u) {
  Vec3 sum{0, 0, 0};
  for (const Vec3& v : u.vertices) sum = sum + v;
  const Coord nv = static_cast<Coord>(u.vertices.size());
  for (auto& f : u.facets) {
    const Vec3 n = newell_normal(u.vertices, f);
    if (dot(n, sum) - dot(n, u.vertices[f[0]]) * nv < 0) std::reverse(f.begin(), f.end());
  }
}

}  // namespace

void finalize_uld(Uld& uld) {
  const std::string where = "ULD " + uld.id + ": ";
  if (uld.vertices.size() < 4) throw ModelError(where + "needs at least four vertices");
  if (uld.facets.size() < 4) throw ModelError(where + "needs at least four facets");

  Vec3 lo = uld.vertices.front(), hi = uld.vertices.front();
  Vec3 sum{0, 0, 0};
  for (const Vec3& v : uld.vertices) {
    for (int d = 0; d < 3; ++d) {
      lo[d] = std::min(lo[d], v[d]);
      hi[d] = std::max(hi[d], v[d]);
    }
    sum = sum + v;
  }
  if (lo != Vec3{0, 0, 0}) throw ModelError(where + "minimum vertex coordinate must be 0 in every dimension");
  const Coord nv = static_cast<Coord>(uld.vertices.size());

  uld.planes.clear();
  uld.tilted_planes.clear();
  std::array<int, 3> parallel{0, 0, 0};
  std::vector<std::set<std::size_t>> tilted_vertex_sets;
  for (const auto& facet : uld.facets) {
    if (facet.size() < 3) throw ModelError(where + "facet with fewer than three vertices");
    for (std::size_t idx : facet)
      if (idx >= uld.vertices.size()) throw ModelError(where + "facet vertex index out of range");
    std::optional<FacetPlane> plane;
    const Vec3& a = uld.vertices[facet[0]];
    for (std::size_t i = 1; i + 1 < facet.size() && !plane; ++i) {
      for (std::size_t j = i + 1; j < facet.size() && !plane; ++j) {
        const Vec3& b = uld.vertices[facet[i]];
        const Vec3& c = uld.vertices[facet[j]];
        const Vec3 n = cross(b - a, c - a);
        if (n != Vec3{0, 0, 0}) plane = plane_through(a, b, c);
      }
    }
    if (!plane) throw ModelError(where + "degenerate facet");
    for (std::size_t idx : facet)
      if (!plane->on_plane(uld.vertices[idx])) throw ModelError(where + "facet vertices are not coplanar");
    // The vertex centroid lies strictly inside a non-degenerate convex polytope.
    const Coord side = dot(plane->normal, sum) - plane->offset * nv;
    if (side == 0) throw ModelError(where + "vertex centroid lies on a facet");
    if (side < 0) {
      for (auto& c : plane->normal) c = -c;
      plane->offset = -plane->offset;
    }
    if (dot(newell_normal(uld.vertices, facet), plane->normal) < 0)
      throw ModelError(where + "facet winding gives an outward normal");
    if (plane->tilted) {
      if (plane->normal[0] != 0) throw ModelError(where + "tilted facets must be orthogonal to the y-z plane");
      tilted_vertex_sets.emplace_back(facet.begin(), facet.end());
      uld.tilted_planes.push_back(*plane);
    } else {
      ++parallel[plane->axis()];
    }
    uld.planes.push_back(*plane);
  }
  for (int d = 0; d < 3; ++d)
    if (parallel[d] != 2) throw ModelError(where + "expected exactly two facets orthogonal to each axis");
  if (uld.tilted_planes.size() > 2) throw ModelError(where + "at most two tilted facets are supported");
  if (tilted_vertex_sets.size() == 2) {
    for (std::size_t idx : tilted_vertex_sets[0])
      if (tilted_vertex_sets[1].count(idx)) throw ModelError(where + "tilted facets must not share a vertex");
  }
  for (const Vec3& v : uld.vertices)
    for (const FacetPlane& f : uld.planes)
      if (!f.contains(v)) throw ModelError(where + "ULD is not convex");
  uld.bounding_box = hi;
  for (Coord b : hi)
    if (b <= 0) throw ModelError(where + "empty bounding box");
  if (uld.edge_width < 0 || uld.edge_offset < 0) throw ModelError(where + "negative edge geometry");
  if (uld.weight_capacity < 0 || uld.volume_capacity < 0) throw ModelError(where + "negative capacity");
}

Uld make_cuboid_uld(std::string id, const Vec3& d, std::int64_t weight_capacity,
                    std::int64_t volume_capacity) {
  Uld u;
  u.id = std::move(id);
  for (int m = 0; m < 8; ++m)
    u.vertices.push_back({(m & 1) ? d[0] : 0, (m & 2) ? d[1] : 0, (m & 4) ? d[2] : 0});
  u.facets = {{0, 2, 6, 4}, {1, 3, 7, 5}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 1, 3, 2}, {4, 5, 7, 6}};
  u.weight_capacity = weight_capacity;
  u.volume_capacity = volume_capacity >= 0 ? volume_capacity : d[0] * d[1] * d[2];
  wind_inward(u);
  finalize_uld(u);
  return u;
}

Uld make_prism_uld(std::string id, Coord length, const std::vector<std::array<Coord, 2>>& profile,
                   std::int64_t weight_capacity, std::int64_t volume_capacity) {
  Uld u;
  u.id = std::move(id);
  const std::size_t n = profile.size();
  for (const auto& p : profile) u.vertices.push_back({0, p[0], p[1]});
  for (const auto& p : profile) u.vertices.push_back({length, p[0], p[1]});
  std::vector<std::size_t> front, back;
  for (std::size_t i = 0; i < n; ++i) {
    front.push_back(i);
    back.push_back(n + i);
  }
  u.facets.push_back(front);
  u.facets.push_back(back);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    u.facets.push_back({i, j, n + j, n + i});
  }
  u.weight_capacity = weight_capacity;
  wind_inward(u);
  finalize_uld(u);
  u.volume_capacity =
      volume_capacity >= 0 ? volume_capacity : static_cast<std::int64_t>(std::llround(geometric_volume(u)));
  return u;
}

double geometric_volume(const Uld& uld) {
  Vec3d c{0, 0, 0};
  for (const Vec3& v : uld.vertices)
    for (int d = 0; d < 3; ++d) c[d] += static_cast<double>(v[d]) / static_cast<double>(uld.vertices.size());
  double vol = 0.0;
  for (std::size_t f = 0; f < uld.facets.size(); ++f) {
    const auto& facet = uld.facets[f];
    const Vec3& a = uld.vertices[facet[0]];
    Vec3 area2{0, 0, 0};
    for (std::size_t i = 1; i + 1 < facet.size(); ++i)
      area2 = area2 + cross(uld.vertices[facet[i]] - a, uld.vertices[facet[i + 1]] - a);
    const double area = 0.5 * std::sqrt(static_cast<double>(dot(area2, area2)));
    const FacetPlane& p = uld.planes.at(f);
    const double nn = std::sqrt(static_cast<double>(dot(p.normal, p.normal)));
    const double dist =
        (p.normal[0] * c[0] + p.normal[1] * c[1] + p.normal[2] * c[2] - static_cast<double>(p.offset)) / nn;
    vol += area * dist / 3.0;
  }
  return vol;
}

std::string sort_order_to_string(const std::array<int, 3>& order) {
  std::string s;
  for (int a : order) s += static_cast<char>('x' + a);
  return s;
}

std::array<int, 3> sort_order_from_string(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ',' && ch != ' ') t += ch;
  if (t.size() != 3) throw ModelError("sort order must name each of x, y, z once");
  std::array<int, 3> out{};
  std::array<bool, 3> seen{false, false, false};
  for (int i = 0; i < 3; ++i) {
    const int a = t[i] - 'x';
    if (a < 0 || a > 2 || seen[a]) throw ModelError("sort order must name each of x, y, z once");
    seen[a] = true;
    out[i] = a;
  }
  return out;
}

Placement make_placement(const std::vector<Item>& items, std::size_t index, const Orientation& o,
                         const Vec3& position) {
  const Item& it = items.at(index);
  Placement p;
  p.item = index;
  p.orientation = o;
  p.position = position;
  p.size = apply_orientation(it, o);
  p.weight = it.weight;
  p.stackable = it.stackable;
  p.dummy = it.dummy;
  return p;
}

std::int64_t UldLoad::loaded_weight() const {
  std::int64_t w = 0;
  for (const auto& p : placements)
    if (!p.dummy) w += p.weight;
  return w;
}

Coord UldLoad::loaded_volume() const {
  Coord v = 0;
  for (const auto& p : placements)
    if (!p.dummy) v += p.volume();
  return v;
}

std::size_t UldLoad::real_item_count() const {
  return static_cast<std::size_t>(
      std::count_if(placements.begin(), placements.end(), [](const Placement& p) { return !p.dummy; }));
}

std::optional<Vec3d> UldLoad::center_of_gravity() const {
  double total = 0.0;
  Vec3d acc{0, 0, 0};
  for (const auto& p : placements) {
    if (p.dummy || p.weight == 0) continue;
    const double w = static_cast<double>(p.weight);
    total += w;
    for (int d = 0; d < 3; ++d) acc[d] += w * (static_cast<double>(p.position[d]) + 0.5 * static_cast<double>(p.size[d]));
  }
  if (total <= 0.0) return std::nullopt;
  for (auto& a : acc) a /= total;
  return acc;
}

double volume_utilization(const UldLoad& load, const Uld& uld) {
  if (uld.volume_capacity <= 0) return 0.0;
  return static_cast<double>(load.loaded_volume()) / static_cast<double>(uld.volume_capacity);
}

}  // namespace uldpack
