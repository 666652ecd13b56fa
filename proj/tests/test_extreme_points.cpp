#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_helpers.hpp"
#include "uldpack/extreme_points.hpp"

using namespace uldpack;
using uldpack::testing::box_at;
using uldpack::testing::uniform_int;

namespace {

std::set<Vec3> coords(const std::vector<ExtremePoint>& pts) {
  std::set<Vec3> s;
  for (const ExtremePoint& p : pts) s.insert(p.coords);
  return s;
}

// Projection scene with a blocking item. Load order is item 1..8.
std::vector<Placement> fig10_scene() {
  return {box_at({0, 0, 10}, {10, 25, 10}),  box_at({0, 0, 0}, {20, 30, 10}),  box_at({20, 0, 0}, {10, 10, 5}),
          box_at({0, 30, 0}, {10, 10, 30}),  box_at({0, 40, 0}, {12, 5, 25}),  box_at({0, 0, 20}, {15, 25, 10}),
          box_at({0, 25, 10}, {30, 5, 20}), box_at({20, 10, 0}, {5, 5, 12})};
}

// Surface-extension scene in x-z; every item spans the full depth.
std::vector<Placement> fig8_scene() {
  const Coord W = 20;
  return {box_at({0, 0, 0}, {20, W, 40}),  box_at({20, 0, 0}, {10, W, 20}), box_at({30, 0, 0}, {40, W, 24}),
          box_at({70, 0, 0}, {10, W, 10}), box_at({80, 0, 0}, {10, W, 30}), box_at({0, 0, 40}, {25, W, 10})};
}

}  // namespace

TEST_CASE("initial store holds the origin only") {
  EpStore s = init_store();
  CHECK(s.size() == 1);
  CHECK(s.contains({0, 0, 0}));
  CHECK_FALSE(s.insert({{0, 0, 0}, false}));
  CHECK(s.size() == 1);
  const auto first = s.next_point(std::nullopt);
  REQUIRE(first);
  CHECK(first->coords == Vec3{0, 0, 0});
  CHECK_FALSE(s.next_point(first->coords));
}

TEST_CASE("store order follows the configured axis priority") {
  EpStore s({kZ, kY, kX});
  s.insert({{0, 0, 5}, false});
  s.insert({{9, 9, 0}, false});
  const auto pts = s.ordered();
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].coords == Vec3{9, 9, 0});
  CHECK(pts[1].coords == Vec3{0, 0, 5});
  EpStore t({kX, kY, kZ});
  t.insert({{0, 0, 5}, false});
  t.insert({{9, 9, 0}, false});
  CHECK(t.ordered()[0].coords == Vec3{0, 0, 5});
}

TEST_CASE("movable flag survives duplicate insertion") {
  EpStore s;
  s.insert({{1, 2, 3}, false});
  s.insert({{1, 2, 3}, true});
  CHECK(s.is_movable({1, 2, 3}));
  s.insert({{1, 2, 3}, false});
  CHECK(s.is_movable({1, 2, 3}));
}

TEST_CASE("moving against the plane y - z = -1") {
  FacetPlane f;
  f.normal = {0, 1, -1};
  f.offset = -1;
  f.tilted = true;
  CHECK(move_offset({0, 2, 3}, 1, f) == doctest::Approx(1.0));
  const Vec3d m = move_point_exact({0, 2, 3}, 1, f);
  CHECK(m[1] == doctest::Approx(3.0));
  CHECK(m[2] == doctest::Approx(3.0));
  const Vec3d u = move_point_exact({0, 5, 0}, 1, f);
  CHECK(u[1] == doctest::Approx(5.0));
}

TEST_CASE("critical point on a hexagonal profile moves onto the tilted facet") {
  const Uld u = make_prism_uld("hex", 8, {{0, 0}, {24, 0}, {24, 8}, {16, 16}, {8, 16}, {0, 8}});
  CHECK(on_movable_facet(u, {0, 4, 12}));
  CHECK_FALSE(on_movable_facet(u, {0, 20, 12}));  // back slope descends in y
  CHECK_FALSE(on_movable_facet(u, {0, 5, 3}));
  CHECK(move_point({{0, 4, 12}, true}, {8, 4, 3}, u) == Vec3{0, 7, 12});
  CHECK(move_point({{0, 4, 12}, false}, {8, 4, 3}, u) == Vec3{0, 4, 12});
  // Point at (0, 6) with item height 9.
  CHECK(move_point({{0, 0, 6}, true}, {8, 4, 9}, u) == Vec3{0, 7, 6});
}

TEST_CASE("empty ULD projection hits the wall") {
  const Uld u = make_cuboid_uld("c", {10, 10, 10});
  const std::vector<Placement> none;
  CHECK(coords(project({3, 3, 3}, kX, none, u)) == std::set<Vec3>{{0, 3, 3}});
}

TEST_CASE("first item at the origin") {
  const Uld u = make_cuboid_uld("c", {20, 20, 20});
  const std::vector<Placement> loaded{box_at({0, 0, 0}, {4, 5, 6})};
  const auto pts = coords(generate_new_points(loaded, loaded[0], u));
  CHECK(pts == std::set<Vec3>{{4, 0, 0}, {0, 5, 0}, {0, 0, 6}});
}

TEST_CASE("projection in x: the blocking item stops the extension of item 5") {
  const Uld u = make_cuboid_uld("c", {40, 50, 40});
  const auto loaded = fig10_scene();
  CHECK(coords(project({25, 10, 12}, kX, loaded, u)) == std::set<Vec3>{{15, 10, 12}, {10, 10, 12}});
  ProjectionOptions nb;
  nb.blocking = false;
  const auto unblocked = coords(project({25, 10, 12}, kX, loaded, u, nb));
  CHECK(unblocked.count({12, 10, 12}) == 1);  // item 5's extension
  ProjectionOptions plain;
  plain.blocking = false;
  plain.surface_extension = false;
  CHECK(coords(project({25, 10, 12}, kX, loaded, u, plain)) == std::set<Vec3>{{10, 10, 12}});
}

TEST_CASE("surface extension: points where the new item might rest") {
  const Uld u = make_cuboid_uld("c", {100, 20, 60});
  const auto loaded = fig8_scene();
  const auto pts = coords(generate_new_points(loaded, loaded.back(), u));
  for (const Vec3& p : std::vector<Vec3>{{25, 0, 30}, {25, 0, 24}, {25, 0, 20}, {0, 0, 50}, {25, 0, 40}})
    CHECK(pts.count(p) == 1);
  Variants cr;
  cr.crainic_mimic = true;
  const auto plain = coords(generate_new_points(loaded, loaded.back(), u, cr));
  CHECK(plain.count({25, 0, 30}) == 0);
  CHECK(plain.count({25, 0, 24}) == 0);
}

TEST_CASE("a z projection never emits a point on a non-stackable hit") {
  const Uld u = make_cuboid_uld("c", {20, 20, 20});
  const std::vector<Placement> loaded{box_at({0, 0, 0}, {10, 10, 5}, false), box_at({0, 0, 5}, {4, 4, 4})};
  for (const ExtremePoint& p : project({2, 2, 9}, kZ, loaded, u)) CHECK(p.coords[2] != 5);
}

TEST_CASE("random scenes: inside the ULD, crainic bound, blocking superset, order insensitive") {
  SplitMix64 rng(99);
  const Uld shapes[] = {make_cuboid_uld("c", {40, 40, 40}), uldpack::testing::two_slope_uld(40, 40, 40, 12)};
  for (int scene = 0; scene < 200; ++scene) {
    const Uld& u = shapes[scene % 2];
    std::vector<Placement> loaded;
    for (int k = 0; k < 8; ++k) {
      const Vec3 size{uniform_int(rng, 2, 12), uniform_int(rng, 2, 12), uniform_int(rng, 2, 12)};
      const Vec3 pos{uniform_int(rng, 0, 40 - size[0]), uniform_int(rng, 0, 40 - size[1]), uniform_int(rng, 0, 40 - size[2])};
      if (!u.contains_box(pos, size)) continue;
      Placement p = box_at(pos, size, rng.below(4) != 0);
      bool clash = false;
      for (const Placement& q : loaded) clash = clash || collides(q.box(), p.box());
      if (!clash) loaded.push_back(p);
    }
    if (loaded.empty()) continue;
    const Placement& added = loaded.back();
    const auto def = generate_new_points(loaded, added, u);
    for (const ExtremePoint& p : def) CHECK(u.contains_point(p.coords));
    // Another box may share the top height, so only points resting on the new one count.
    if (!added.stackable)
      for (const ExtremePoint& p : def) {
        const bool on_top = p.coords[2] == added.end_position()[2] && p.coords[0] >= added.position[0] &&
                            p.coords[0] < added.end_position()[0] && p.coords[1] >= added.position[1] &&
                            p.coords[1] < added.end_position()[1];
        CHECK_FALSE(on_top);
      }
    Variants nb;
    nb.no_blocking = true;
    const auto sup = coords(generate_new_points(loaded, added, u, nb));
    for (const Vec3& c : coords(def)) CHECK(sup.count(c) == 1);
    Variants cr;
    cr.crainic_mimic = true;
    CHECK(generate_new_points(loaded, added, u, cr).size() <= 6);
    std::vector<Placement> shuffled = loaded;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(coords(generate_new_points(shuffled, added, u)) == coords(def));
  }
}
