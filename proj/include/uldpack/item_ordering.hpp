#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "uldpack/model.hpp"
#include "uldpack/rng.hpp"

namespace uldpack {

// Listed in the order the search applies them.
enum class SortCriterion { stackability_cumulated, stackability_highest, cumulated_volume, highest_volume, random };

inline constexpr std::array<SortCriterion, 5> kAllCriteria{
    SortCriterion::stackability_cumulated, SortCriterion::stackability_highest, SortCriterion::cumulated_volume,
    SortCriterion::highest_volume, SortCriterion::random};

const char* to_string(SortCriterion c);
SortCriterion criterion_from_string(const std::string& s);

struct IdenticalGroup {
  std::vector<std::size_t> members;  // item indices, ascending
  Vec3 dims{};                       // sorted ascending
  bool stackable = true;
  Coord cumulated_volume = 0;
  Coord highest_volume = 0;
};

struct SimilarGroup {
  Coord height = 0;
  bool stackable = true;
  std::vector<std::size_t> groups;  // indices into the identical group list
};

struct Groups {
  std::vector<IdenticalGroup> identical;
  std::vector<SimilarGroup> similar;
};

// Groups the items listed in `subset` (indices into `items`).
Groups build_groups(const std::vector<Item>& items, std::span<const std::size_t> subset);

bool can_realize_height(const Item& item, Coord h);

// Orientations giving height h, with one tilt and optional rotation.
// Throws ModelError when no admissible tilt gives h.
std::vector<Orientation> orientations_for(const Item& item, Coord h);

using UniformSource = std::function<double()>;

// Draws element ceil(y^(1/rho) * remaining) of the remaining list, clamped to
// [1, remaining], with y from `uniform`.
template <typename T>
std::vector<T> randomize(const std::vector<T>& sorted, double rho, const UniformSource& uniform);

struct OrderEntry {
  std::size_t item;
  std::vector<Orientation> orientations;
  Coord height;
};

// Loading order for one insertion run. rho == 0 disables randomisation.
std::vector<OrderEntry> build_order(const std::vector<Item>& items, std::span<const std::size_t> subset,
                                    SortCriterion criterion, double rho, SplitMix64& rng);

}  // namespace uldpack

#include "uldpack/item_ordering_impl.hpp"
