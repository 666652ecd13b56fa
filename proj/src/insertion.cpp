#include "uldpack/insertion.hpp"

#include <algorithm>

#include "uldpack/spatial_grid.hpp"

namespace uldpack {

std::vector<Placement> adapt_uld(const Uld& uld, bool use_substructure) {
  if (use_substructure && !uld.substructure_allowed)
    throw ModelError("ULD " + uld.id + ": substructure not allowed");
  std::vector<Placement> out;
  const Coord e = uld.edge_width;
  const Coord delta = uld.edge_offset;
  const Vec3& b = uld.bounding_box;
  const auto dummy = [&](const char* label, Vec3 pos, Vec3 size, bool stackable) {
    Placement p;
    p.label = label;
    p.position = pos;
    p.size = size;
    p.stackable = stackable;
    p.dummy = true;
    out.push_back(p);
  };
  if (e > 0 && delta > 0) {
    const Coord h = std::max<Coord>(1, delta - 1);
    dummy("edge_front", {0, 0, 0}, {b[0], e, h}, false);
    dummy("edge_back", {0, b[1] - e, 0}, {b[0], e, h}, false);
    dummy("edge_left", {0, 0, 0}, {e, b[1], h}, false);
    dummy("edge_right", {b[0] - e, 0, 0}, {e, b[1], h}, false);
  }
  if (use_substructure && delta > 0 && b[0] > 2 * e && b[1] > 2 * e)
    dummy("substructure", {e, e, 0}, {b[0] - 2 * e, b[1] - 2 * e, delta}, true);
  return out;
}

InsertionRun::InsertionRun(const Uld& uld, const std::vector<Item>& items, const PackingParams& packing,
                           const AlgoParams& algo, std::optional<double> cell_size, bool use_substructure)
    : uld_(&uld),
      items_(&items),
      algo_(algo),
      state_(uld, packing, cell_size),
      points_(init_store(algo.ep_sort_order)),
      substructure_(use_substructure) {
  const std::vector<Placement> dummies = adapt_uld(uld, use_substructure);
  for (const Placement& d : dummies) state_.add(d);
  for (const Placement& d : dummies)
    for (const ExtremePoint& e : generate_new_points(state_.placements(), d, uld, algo_.variants)) points_.insert(e);
  const bool frames = std::any_of(dummies.begin(), dummies.end(), [](const Placement& p) { return !p.stackable; });
  const bool sub = std::any_of(dummies.begin(), dummies.end(), [](const Placement& p) { return p.stackable; });
  if (frames && !sub) {
    const Vec3 corner{uld.edge_width, uld.edge_width, 0};
    if (uld.contains_point(corner)) points_.insert({corner, on_movable_facet(uld, corner)});
  }
}

void InsertionRun::place(Placement p) {
  const std::size_t idx = state_.add(std::move(p));
  const Placement& added = state_.placements()[idx];
  for (const ExtremePoint& e : generate_new_points(state_.placements(), added, *uld_, algo_.variants))
    points_.insert(e);
}

bool InsertionRun::try_insert(std::size_t item, std::span<const Orientation> orientations, CheckCounter* counter) {
  if (aborted_) return false;
  const Item& it = (*items_)[item];
  const bool moving = !algo_.variants.no_moving && !algo_.variants.crainic_mimic;
  std::vector<Vec3> sizes;
  sizes.reserve(orientations.size());
  for (const Orientation& o : orientations) sizes.push_back(apply_orientation(it, o));
  for (const ExtremePoint& e : points_.ordered()) {
    for (std::size_t k = 0; k < orientations.size(); ++k) {
      if (counter && abort_on_budget_ && counter->exhausted()) {
        aborted_ = true;
        return false;
      }
      const Vec3 pos = moving ? move_point(e, sizes[k], *uld_) : e.coords;
      if (can_load_at(state_, it, sizes[k], pos, counter)) {
        place(make_placement(*items_, item, orientations[k], pos));
        return true;
      }
    }
  }
  return false;
}

UldLoad InsertionRun::to_load(std::size_t uld_index) const {
  UldLoad l;
  l.uld = uld_index;
  l.placements = state_.placements();
  l.substructure_used = substructure_;
  return l;
}

UldLoad load_single_uld(const std::vector<Item>& items, std::span<const std::size_t> subset, const Uld& uld,
                        std::size_t uld_index, const PackingParams& packing, const AlgoParams& algo,
                        const InsertionOptions& opt, SplitMix64& rng, CheckCounter& counter, bool* aborted) {
  InsertionRun run(uld, items, packing, algo, opt.cell_size, opt.use_substructure);
  run.set_abort_on_budget(opt.abort_on_budget);
  const std::vector<OrderEntry> order = build_order(items, subset, opt.criterion, opt.rho, rng);
  std::vector<bool> loaded(items.size(), false);
  for (const OrderEntry& entry : order) {
    if (loaded[entry.item]) continue;
    if (run.try_insert(entry.item, entry.orientations, &counter)) loaded[entry.item] = true;
    if (run.aborted()) break;
  }
  if (aborted) *aborted = run.aborted();
  return run.to_load(uld_index);
}

std::optional<double> solver_cell_size(const std::vector<Item>& items, const AlgoParams& algo) {
  if (algo.variants.no_grid || items.empty()) return std::nullopt;
  return mean_edge(items);
}

}  // namespace uldpack
