#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "test_helpers.hpp"
#include "uldpack/hole_closing.hpp"
#include "uldpack/insertion.hpp"
#include "uldpack/validator.hpp"

using namespace uldpack;
using uldpack::testing::make_item;

namespace {

// Side view (x, z) of a 20 x 4 x 10 ULD; every box spans the full depth.
// A stack of four boxes on a long base, a tall box near the far wall, and a
// narrow non-stackable base piece between them.
struct Scene {
  Uld uld = make_cuboid_uld("c", {20, 4, 10});
  std::vector<Item> items;
  UldLoad load;
  PackingParams params;

  Scene() {
    params.max_padding_height = 0;
    params.min_item_overlap = 0.9;
    const struct {
      Coord x0, x1, z0, z1;
      bool stackable;
    } boxes[] = {{0, 4, 1, 5, true},  {4, 10, 1, 3, true}, {4, 8, 3, 5, true},    {0, 8, 5, 7, true},
                 {16, 20, 1, 9, true}, {0, 14, 0, 1, true}, {14, 16, 0, 1, false}, {16, 20, 0, 1, true}};
    for (const auto& b : boxes) {
      items.push_back(make_item("b" + std::to_string(items.size()), {b.x1 - b.x0, 4, b.z1 - b.z0}, 1, false, false,
                                b.stackable));
      load.placements.push_back(make_placement(items, items.size() - 1, {}, {b.x0, 0, b.z0}));
    }
  }
};

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("hole detection in the stacked scene") {
  const Scene s;
  CHECK_FALSE(has_hole(s.load, s.uld, 0, kX));
  CHECK(has_hole(s.load, s.uld, 1, kX));
  CHECK(has_hole(s.load, s.uld, 2, kX));
  CHECK(has_hole(s.load, s.uld, 3, kX));
  CHECK(has_hole(s.load, s.uld, 4, kX));
  CHECK(centerward_sign(s.load.placements[4], s.uld, kX) == -1);
  for (std::size_t i = 5; i < 8; ++i) CHECK_FALSE(has_hole(s.load, s.uld, i, kX));
  for (std::size_t i = 0; i < 8; ++i) CHECK_FALSE(has_hole(s.load, s.uld, i, kY));
}

TEST_CASE("movable sets") {
  const Scene s;
  CHECK(as_set(movable_set(s.load, 0, 0)) == std::set<std::size_t>{0, 1, 2, 3});
  CHECK(as_set(movable_set(s.load, 1, 0)) == std::set<std::size_t>{0, 1, 2, 3});
  CHECK(movable_set(s.load, 2, 0).empty());
}

TEST_CASE("slide stops at the non-stackable base piece") {
  Scene s;
  UldLoad l = s.load;
  CHECK(slide(l, s.uld, {0, 1, 2, 3}, kX, +1, s.params) == 4);
  CHECK(l.placements[0].position == Vec3{4, 0, 1});
  CHECK(l.placements[1].position == Vec3{8, 0, 1});

  Scene t;
  close_holes(t.load, t.uld, t.params, 100);
  CHECK(t.load.placements[0].position == Vec3{4, 0, 1});
  CHECK(t.load.placements[1].position == Vec3{8, 0, 1});
  CHECK(t.load.placements[4].position == Vec3{16, 0, 1});
  CHECK(validate_load(t.load, t.uld, t.items, t.params).hard_count() == 0);
}

TEST_CASE("simple cases") {
  const Uld u = make_cuboid_uld("c", {20, 10, 10});
  const std::vector<Item> items{make_item("a", {4, 10, 4}), make_item("b", {4, 10, 8})};
  const PackingParams p;
  {
    UldLoad l;
    l.placements.push_back(make_placement(items, 0, {}, {3, 0, 0}));
    CHECK(movable_set(l, 0, p.max_padding_height) == std::vector<std::size_t>{0});
    CHECK(find_holes(l, u).empty());  // nothing beyond the gap
  }
  {
    UldLoad l;
    l.placements.push_back(make_placement(items, 0, {}, {2, 0, 0}));
    l.placements.push_back(make_placement(items, 1, {}, {16, 0, 0}));
    REQUIRE_FALSE(find_holes(l, u).empty());
    close_holes(l, u, p, 100);
    CHECK(l.placements[0].end_position()[0] == l.placements[1].position[0]);
    CHECK(find_holes(l, u).empty());
  }
  {
    // Wedged: the item touches the blocker already.
    UldLoad l;
    l.placements.push_back(make_placement(items, 0, {}, {0, 0, 0}));
    l.placements.push_back(make_placement(items, 1, {}, {4, 0, 0}));
    UldLoad before = l;
    CHECK(slide(l, u, {0}, kX, +1, p) == 0);
    CHECK(l.placements[0].position == before.placements[0].position);
    CHECK(close_holes(l, u, p, 100) == 1);
  }
}

TEST_CASE("hole closing preserves items and feasibility") {
  SplitMix64 gen(29);
  int hard = 0;
  for (int scene = 0; scene < 60; ++scene) {
    const std::vector<Item> items = uldpack::testing::random_items(gen, 20, 5, 30);
    const Uld u = scene % 2 ? uldpack::testing::two_slope_uld() : make_cuboid_uld("c", {90, 80, 70});
    std::vector<std::size_t> subset(items.size());
    std::iota(subset.begin(), subset.end(), 0);
    InsertionOptions opt;
    opt.rho = 0.5;
    SplitMix64 rng(scene);
    CheckCounter counter;
    UldLoad l = load_single_uld(items, subset, u, 0, PackingParams{}, AlgoParams{}, opt, rng, counter);
    const UldLoad before = l;
    close_holes(l, u, PackingParams{}, 100);
    hard += static_cast<int>(validate_load(l, u, items, PackingParams{}).hard_count());
    REQUIRE(l.placements.size() == before.placements.size());
    CHECK(l.loaded_volume() == before.loaded_volume());
    CHECK(l.loaded_weight() == before.loaded_weight());
    for (std::size_t i = 0; i < l.placements.size(); ++i) {
      CHECK(l.placements[i].item == before.placements[i].item);
      CHECK(l.placements[i].size == before.placements[i].size);
      CHECK(l.placements[i].orientation == before.placements[i].orientation);
    }
  }
  CHECK(hard == 0);
}
