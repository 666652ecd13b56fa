#include "uldpack/feasibility.hpp"

#include <algorithm>

namespace uldpack {

namespace {

struct Support {
  Box box;
  bool stackable;
};

SupportReport run_support(std::vector<Support>& r, const Box& cand, const PackingParams& params) {
  const Coord z = cand.pos[2];
  std::stable_sort(r.begin(), r.end(),
                   [](const Support& a, const Support& b) { return a.box.end()[2] > b.box.end()[2]; });

  const Coord cx0 = cand.pos[0], cy0 = cand.pos[1];
  const Coord cx1 = cx0 + cand.size[0], cy1 = cy0 + cand.size[1];
  const std::array<std::array<Coord, 2>, 4> corners{{{cx0, cy0}, {cx1, cy0}, {cx0, cy1}, {cx1, cy1}}};

  SupportReport rep;
  unsigned corner_mask = 0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const Support& l = r[k];
    const bool direct = l.box.end()[2] == z;
    if (!l.stackable) {
      if (direct) {
        rep.verdict = false;
        rep.directly_supported = false;
        rep.supported_area = 0;
        rep.supported_corner_count = 0;
        return rep;
      }
      continue;
    }
    if (direct) {
      const Vec3 e = l.box.end();
      for (int c = 0; c < 4; ++c) {
        if (corners[c][0] >= l.box.pos[0] && corners[c][0] <= e[0] && corners[c][1] >= l.box.pos[1] &&
            corners[c][1] <= e[1])
          corner_mask |= 1u << c;
      }
      rep.directly_supported = true;
    }
    Coord extra = base_area_overlap(l.box, cand);
    for (std::size_t j = 0; j < k; ++j) extra -= triple_base_area_overlap(l.box, r[j].box, cand);
    if (extra > 0) rep.supported_area += extra;
  }
  rep.supported_corner_count = __builtin_popcount(corner_mask);
  const double need = params.min_item_overlap * static_cast<double>(cand.footprint_area());
  const bool area_ok = static_cast<double>(rep.supported_area) >= need - 1e-9 * need;
  if (params.corner_support_mode == CornerSupportMode::corners_only)
    rep.verdict = rep.directly_supported && rep.supported_corner_count == 4;
  else
    rep.verdict = rep.directly_supported && (rep.supported_corner_count == 4 || area_ok);
  return rep;
}

bool relevant(const Box& b, const Box& cand, Coord padding) {
  const Coord top = b.end()[2];
  return top >= cand.pos[2] - padding && top <= cand.pos[2] && base_area_overlap(b, cand) > 0;
}

Support floor_support(const Vec3& bbox) { return {Box{{0, 0, 0}, {bbox[0], bbox[1], 0}}, true}; }

}  // namespace

SupportReport check_support(std::span<const Placement> loaded, const Vec3& bbox, const Box& candidate,
                            const PackingParams& params) {
  std::vector<Support> r;
  const Support fl = floor_support(bbox);
  if (relevant(fl.box, candidate, params.max_padding_height)) r.push_back(fl);
  for (const Placement& p : loaded)
    if (relevant(p.box(), candidate, params.max_padding_height)) r.push_back({p.box(), p.stackable});
  return run_support(r, candidate, params);
}

SupportReport check_support(const std::vector<Placement>& placements, std::span<const std::size_t> subset,
                            const Vec3& bbox, const Box& candidate, const PackingParams& params) {
  std::vector<Support> r;
  const Support fl = floor_support(bbox);
  if (relevant(fl.box, candidate, params.max_padding_height)) r.push_back(fl);
  for (std::size_t idx : subset) {
    const Placement& p = placements[idx];
    if (relevant(p.box(), candidate, params.max_padding_height)) r.push_back({p.box(), p.stackable});
  }
  return run_support(r, candidate, params);
}

LoadState::LoadState(const Uld& uld, const PackingParams& params, std::optional<double> cell_size)
    : uld_(&uld), params_(params) {
  if (cell_size) grid_.emplace(uld.bounding_box, *cell_size);
}

std::size_t LoadState::add(Placement p) {
  const std::size_t id = placements_.size();
  if (grid_) grid_->add(id, p.box());
  if (!p.dummy) {
    real_weight_ += p.weight;
    real_volume_ += p.volume();
  }
  placements_.push_back(std::move(p));
  return id;
}

std::vector<std::size_t> LoadState::collision_candidates(const Box& b) const {
  if (grid_) return grid_->candidates_colliding(b.pos, b.size);
  std::vector<std::size_t> all(placements_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

std::vector<std::size_t> LoadState::support_candidates(const Box& b) const {
  if (grid_) return grid_->candidates_below(b.pos, b.size, params_.max_padding_height);
  std::vector<std::size_t> all(placements_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

bool LoadState::collides_any(const Box& b) const {
  if (grid_) return grid_->any_colliding(b.pos, b.size, [&](std::size_t idx) { return collides(placements_[idx].box(), b); });
  return std::any_of(placements_.begin(), placements_.end(),
                     [&](const Placement& p) { return collides(p.box(), b); });
}

SupportReport LoadState::support(const Box& candidate) const {
  if (grid_) {
    const auto cands = grid_->candidates_below(candidate.pos, candidate.size, params_.max_padding_height);
    return check_support(placements_, cands, uld_->bounding_box, candidate, params_);
  }
  return check_support(std::span<const Placement>(placements_), uld_->bounding_box, candidate, params_);
}

bool fits_uld(const Uld& uld, const Vec3& pos, const Vec3& size) {
  for (int d = 0; d < 3; ++d)
    if (pos[d] < 0) return false;
  if (!fits_bounding_box(pos, size, uld.bounding_box)) return false;
  for (const FacetPlane& f : uld.tilted_planes)
    if (!inside_tilted_facet(pos, size, f)) return false;
  return true;
}

namespace {

// A point can sit below an already loaded item, so a non-stackable candidate
// must not end up under anything resting on its top or within the padding band.
bool carries_load(const LoadState& state, const Box& b) {
  const Coord top = b.pos[2] + b.size[2];
  const Coord pad = state.params().max_padding_height;
  const Box slab{{b.pos[0], b.pos[1], top}, {b.size[0], b.size[1], pad + 1}};
  for (std::size_t i : state.collision_candidates(slab)) {
    const Placement& p = state.placements()[i];
    if (p.position[2] >= top && p.position[2] <= top + pad && base_area_overlap(p.box(), b) > 0) return true;
  }
  return false;
}

}  // namespace

bool can_load_at(const LoadState& state, const Item& item, const Vec3& oriented, const Vec3& point,
                 CheckCounter* counter) {
  if (counter) counter->tick();
  const Uld& uld = state.uld();
  if (!fits_uld(uld, point, oriented)) return false;
  if (state.real_weight() + item.weight > uld.weight_capacity) return false;
  if (state.real_volume() + oriented[0] * oriented[1] * oriented[2] > uld.volume_capacity) return false;
  const Box b{point, oriented};
  if (state.collides_any(b)) return false;
  if (!item.stackable && carries_load(state, b)) return false;
  return state.support(b).verdict;
}

}  // namespace uldpack
