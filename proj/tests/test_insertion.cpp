#include <numeric>

#include "doctest.h"
#include "test_helpers.hpp"
#include "uldpack/insertion.hpp"
#include "uldpack/validator.hpp"

using namespace uldpack;
using uldpack::testing::make_item;

namespace {

Uld edged_cuboid(bool substructure) {
  Uld u = make_cuboid_uld("c", {100, 80, 60});
  u.edge_width = 10;
  u.edge_offset = 10;
  u.substructure_allowed = substructure;
  finalize_uld(u);
  return u;
}

std::vector<std::size_t> all_of(const std::vector<Item>& items) {
  std::vector<std::size_t> v(items.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("adapt_uld dummies") {
  CHECK(adapt_uld(make_cuboid_uld("c", {10, 10, 10}), false).empty());
  const auto frames = adapt_uld(edged_cuboid(false), false);
  REQUIRE(frames.size() == 4);
  for (const Placement& p : frames) {
    CHECK(p.dummy);
    CHECK_FALSE(p.stackable);
    CHECK(p.size[2] == 9);
    CHECK(p.position[2] == 0);
  }
  const auto with_sub = adapt_uld(edged_cuboid(true), true);
  REQUIRE(with_sub.size() == 5);
  const Placement& sub = with_sub.back();
  CHECK(sub.stackable);
  CHECK(sub.position == Vec3{10, 10, 0});
  CHECK(sub.size == Vec3{80, 60, 10});
  CHECK_THROWS_AS(adapt_uld(edged_cuboid(false), true), ModelError);
}

TEST_CASE("empty and trivial loads") {
  const Uld unit = make_cuboid_uld("u", {1, 1, 1});
  SplitMix64 rng(0);
  CheckCounter counter;
  const std::vector<Item> none;
  const UldLoad empty = load_single_uld(none, {}, unit, 0, PackingParams{}, AlgoParams{}, {}, rng, counter);
  CHECK(empty.real_item_count() == 0);
  const std::vector<Item> cube{make_item("a", {1, 1, 1})};
  const UldLoad one = load_single_uld(cube, all_of(cube), unit, 0, PackingParams{}, AlgoParams{}, {}, rng, counter);
  CHECK(one.real_item_count() == 1);
  CHECK(volume_utilization(one, unit) == doctest::Approx(1.0));
}

TEST_CASE("an item lands on the point moved off a slope") {
  const Uld u = make_prism_uld("slope", 8, {{0, 0}, {24, 0}, {24, 8}, {16, 16}, {8, 16}, {0, 8}});
  const std::vector<Item> items{make_item("low", {8, 4, 4}, 1, false, false, false),
                                make_item("tall", {8, 10, 12}, 1, false),
                                make_item("filler", {8, 10, 8}, 1, false, false, false),
                                make_item("top", {8, 4, 3}, 1, false)};
  PackingParams pp;
  pp.max_padding_height = 0;
  InsertionRun run(u, items, pp, AlgoParams{}, std::nullopt, false);
  run.place(make_placement(items, 0, {}, {0, 0, 0}));
  run.place(make_placement(items, 1, {}, {0, 4, 0}));
  run.place(make_placement(items, 2, {}, {0, 14, 0}));
  const std::vector<Orientation> o{Orientation{}};
  REQUIRE(run.try_insert(3, o, nullptr));
  CHECK(run.state().placements().back().position == Vec3{0, 7, 12});
}

TEST_CASE("loads are feasible and deterministic") {
  SplitMix64 gen(11);
  for (int scene = 0; scene < 30; ++scene) {
    const std::vector<Item> items = uldpack::testing::random_items(gen, 25, 5, 35);
    Uld u = uldpack::testing::two_slope_uld();
    u.edge_width = 5;
    u.edge_offset = 5;
    u.substructure_allowed = true;
    finalize_uld(u);
    InsertionOptions opt;
    opt.criterion = kAllCriteria[static_cast<std::size_t>(scene) % kAllCriteria.size()];
    opt.rho = scene % 2 ? 0.5 : 0.0;
    opt.use_substructure = scene % 3 == 0;
    opt.cell_size = solver_cell_size(items, AlgoParams{});
    UldLoad a, b;
    {
      SplitMix64 rng(scene);
      CheckCounter c;
      a = load_single_uld(items, all_of(items), u, 0, PackingParams{}, AlgoParams{}, opt, rng, c);
    }
    {
      SplitMix64 rng(scene);
      CheckCounter c;
      b = load_single_uld(items, all_of(items), u, 0, PackingParams{}, AlgoParams{}, opt, rng, c);
    }
    const ValidationReport rep = validate_load(a, u, items, PackingParams{});
    CHECK(rep.hard_count() == 0);
    REQUIRE(a.placements.size() == b.placements.size());
    for (std::size_t i = 0; i < a.placements.size(); ++i) {
      CHECK(a.placements[i].position == b.placements[i].position);
      CHECK(a.placements[i].size == b.placements[i].size);
    }
  }
}

TEST_CASE("an exhausted budget aborts the run") {
  SplitMix64 gen(3);
  const std::vector<Item> items = uldpack::testing::random_items(gen, 40, 5, 20);
  const Uld u = make_cuboid_uld("c", {60, 60, 60});
  SplitMix64 rng(1);
  CheckCounter counter(5);
  bool aborted = false;
  load_single_uld(items, all_of(items), u, 0, PackingParams{}, AlgoParams{}, {}, rng, counter, &aborted);
  CHECK(aborted);
}
