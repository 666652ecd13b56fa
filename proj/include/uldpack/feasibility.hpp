#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "uldpack/geometry.hpp"
#include "uldpack/model.hpp"
#include "uldpack/spatial_grid.hpp"

namespace uldpack {

struct SupportReport {
  bool directly_supported = false;
  Coord supported_area = 0;
  int supported_corner_count = 0;
  bool verdict = false;
};

// Support and stackability check over `loaded` (the floor is added
// internally). `loaded` may be any superset of the relevant placements.
SupportReport check_support(std::span<const Placement> loaded, const Vec3& bbox, const Box& candidate,
                            const PackingParams& params);
SupportReport check_support(const std::vector<Placement>& placements, std::span<const std::size_t> subset,
                            const Vec3& bbox, const Box& candidate, const PackingParams& params);

// Counts feasibility evaluations against a global limit.
class CheckCounter {
 public:
  explicit CheckCounter(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) : limit_(limit) {}

  void tick() { ++used_; }
  bool exhausted() const { return used_ >= limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }
  void set_limit(std::uint64_t limit) { limit_ = limit; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
};

// Placements of one ULD under construction, with an optional grid index.
class LoadState {
 public:
  LoadState(const Uld& uld, const PackingParams& params, std::optional<double> cell_size);

  const Uld& uld() const { return *uld_; }
  const PackingParams& params() const { return params_; }
  const std::vector<Placement>& placements() const { return placements_; }
  bool uses_grid() const { return grid_.has_value(); }

  std::size_t add(Placement p);
  std::int64_t real_weight() const { return real_weight_; }
  Coord real_volume() const { return real_volume_; }

  std::vector<std::size_t> collision_candidates(const Box& b) const;
  std::vector<std::size_t> support_candidates(const Box& b) const;

  bool collides_any(const Box& b) const;
  SupportReport support(const Box& candidate) const;

 private:
  const Uld* uld_;
  PackingParams params_;
  std::optional<SpatialGrid> grid_;
  std::vector<Placement> placements_;
  std::int64_t real_weight_ = 0;
  Coord real_volume_ = 0;
};

bool fits_uld(const Uld& uld, const Vec3& pos, const Vec3& size);

// Bounding box, tilted facets, capacities, collisions, support. Ticks the
// counter when one is given.
bool can_load_at(const LoadState& state, const Item& item, const Vec3& oriented, const Vec3& point,
                 CheckCounter* counter = nullptr);

}  // namespace uldpack
