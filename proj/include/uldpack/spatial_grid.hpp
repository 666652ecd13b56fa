#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "uldpack/geometry.hpp"
#include "uldpack/model.hpp"

namespace uldpack {

// Mean edge length over all items. Throws ModelError on an empty list.
double mean_edge(std::span<const Item> items);

struct CellRange {
  std::array<int, 3> lo{};
  std::array<int, 3> hi{};  // inclusive

  std::size_t cell_count() const;
};

// Uniform grid of half-open cubic cells over a ULD bounding box.
class SpatialGrid {
 public:
  SpatialGrid(const Vec3& bounding_box, double cell_size);

  double cell_size() const { return cell_size_; }
  const std::array<int, 3>& dims() const { return dims_; }

  CellRange cells_for_box(const Vec3& pos, const Vec3& size) const;

  // Registers a placement index under every cell its box touches.
  void add(std::size_t id, const Box& box);
  void clear();

  // Sorted, duplicate-free indices of placements sharing a cell with the box.
  std::vector<std::size_t> candidates_colliding(const Vec3& pos, const Vec3& size) const;
  // Same for the support slab [pos.z - padding - 1, pos.z) below the footprint.
  std::vector<std::size_t> candidates_below(const Vec3& pos, const Vec3& size, Coord padding) const;

  // Calls pred on every index sharing a cell with the box, duplicates
  // included, and stops at the first true.
  template <typename Pred>
  bool any_colliding(const Vec3& pos, const Vec3& size, Pred&& pred) const {
    const CellRange r = cells_for_box(pos, size);
    for (int k = r.lo[2]; k <= r.hi[2]; ++k)
      for (int j = r.lo[1]; j <= r.hi[1]; ++j)
        for (int i = r.lo[0]; i <= r.hi[0]; ++i)
          for (std::size_t id : cells_[flat(i, j, k)])
            if (pred(id)) return true;
    return false;
  }

 private:
  std::vector<std::size_t> collect(const CellRange& r) const;
  std::size_t flat(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * dims_[1] + j) * dims_[0] + i;
  }

  double cell_size_;
  std::array<int, 3> dims_{};
  std::vector<std::vector<std::size_t>> cells_;
};

}  // namespace uldpack
