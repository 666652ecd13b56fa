#include "uldpack/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uldpack {

double mean_edge(std::span<const Item> items) {
  if (items.empty()) throw ModelError("mean_edge: empty item set");
  double sum = 0.0;
  for (const Item& it : items) sum += static_cast<double>(it.size[0] + it.size[1] + it.size[2]);
  return sum / (3.0 * static_cast<double>(items.size()));
}

std::size_t CellRange::cell_count() const {
  std::size_t n = 1;
  for (int d = 0; d < 3; ++d) n *= hi[d] >= lo[d] ? static_cast<std::size_t>(hi[d] - lo[d] + 1) : 0;
  return n;
}

SpatialGrid::SpatialGrid(const Vec3& bbox, double cell_size) : cell_size_(cell_size) {
  if (!(cell_size > 0.0)) throw std::invalid_argument("SpatialGrid: cell size must be positive");
  for (int d = 0; d < 3; ++d) {
    dims_[d] = std::max(1, static_cast<int>(std::ceil(static_cast<double>(bbox[d]) / cell_size)));
    // Guard against rounding in the division.
    while (static_cast<double>(dims_[d]) * cell_size < static_cast<double>(bbox[d])) ++dims_[d];
  }
  cells_.resize(static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2]);
}

CellRange SpatialGrid::cells_for_box(const Vec3& pos, const Vec3& size) const {
  CellRange r;
  for (int d = 0; d < 3; ++d) {
    const auto idx = [&](Coord v) {
      const long long c = static_cast<long long>(std::floor(static_cast<double>(v) / cell_size_));
      return static_cast<int>(std::clamp<long long>(c, 0, dims_[d] - 1));
    };
    r.lo[d] = idx(pos[d]);
    r.hi[d] = idx(pos[d] + size[d] - 1);
  }
  return r;
}

void SpatialGrid::add(std::size_t id, const Box& box) {
  const CellRange r = cells_for_box(box.pos, box.size);
  for (int k = r.lo[2]; k <= r.hi[2]; ++k)
    for (int j = r.lo[1]; j <= r.hi[1]; ++j)
      for (int i = r.lo[0]; i <= r.hi[0]; ++i) cells_[flat(i, j, k)].push_back(id);
}

void SpatialGrid::clear() {
  for (auto& c : cells_) c.clear();
}

std::vector<std::size_t> SpatialGrid::collect(const CellRange& r) const {
  std::vector<std::size_t> out;
  for (int k = r.lo[2]; k <= r.hi[2]; ++k)
    for (int j = r.lo[1]; j <= r.hi[1]; ++j)
      for (int i = r.lo[0]; i <= r.hi[0]; ++i) {
        const auto& c = cells_[flat(i, j, k)];
        out.insert(out.end(), c.begin(), c.end());
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> SpatialGrid::candidates_colliding(const Vec3& pos, const Vec3& size) const {
  return collect(cells_for_box(pos, size));
}

std::vector<std::size_t> SpatialGrid::candidates_below(const Vec3& pos, const Vec3& size, Coord padding) const {
  // Integer z-range [pos.z - padding - 1, pos.z - 1] holds the top layer of
  // every item whose top lies in [pos.z - padding, pos.z].
  const Vec3 slab_pos{pos[0], pos[1], pos[2] - padding - 1};
  const Vec3 slab_size{size[0], size[1], padding + 1};
  if (pos[2] <= 0) return {};
  return collect(cells_for_box(slab_pos, slab_size));
}

}  // namespace uldpack
