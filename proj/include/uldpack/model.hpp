#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uldpack/geometry.hpp"

namespace uldpack {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InadmissibleOrientation : public ModelError {
 public:
  using ModelError::ModelError;
};

struct Item {
  std::string id;
  Vec3 size{1, 1, 1};
  std::int64_t weight = 0;
  bool rotatable = false;
  bool tiltable = false;
  bool stackable = true;
  bool dummy = false;

  Coord volume() const { return size[0] * size[1] * size[2]; }
};

// Throws ModelError when sizes or flags are inconsistent.
void validate_item(const Item& item);

enum class Tilt { none, across_x, across_y };

struct Orientation {
  Tilt tilt = Tilt::none;
  bool rotated = false;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

const char* to_string(Tilt t);
Tilt tilt_from_string(const std::string& s);

bool is_admissible(const Item& item, const Orientation& o);
// Tilt first, then rotation (swap of the first two components).
Vec3 apply_orientation(const Item& item, const Orientation& o);
Vec3 oriented_size(const Vec3& size, const Orientation& o);
// Order: tilts none, across_x, across_y; unrotated before rotated.
std::vector<Orientation> admissible_orientations(const Item& item);

struct Uld {
  std::string id;
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::size_t>> facets;
  std::int64_t weight_capacity = std::numeric_limits<std::int64_t>::max();
  std::int64_t volume_capacity = std::numeric_limits<std::int64_t>::max();
  Coord edge_width = 0;
  Coord edge_offset = 0;
  bool substructure_allowed = false;

  // Filled by finalize_uld.
  std::vector<FacetPlane> planes;
  std::vector<FacetPlane> tilted_planes;
  Vec3 bounding_box{};

  bool contains_point(const Vec3& p) const;
  bool contains_box(const Vec3& pos, const Vec3& size) const;
};

// Derives planes and the bounding box and checks the supported-shape rules.
void finalize_uld(Uld& uld);
Uld make_cuboid_uld(std::string id, const Vec3& dims,
                    std::int64_t weight_capacity = std::numeric_limits<std::int64_t>::max(),
                    std::int64_t volume_capacity = -1);
// Prism along x with a convex (y, z) profile given counter-clockwise.
Uld make_prism_uld(std::string id, Coord length, const std::vector<std::array<Coord, 2>>& profile,
                   std::int64_t weight_capacity = std::numeric_limits<std::int64_t>::max(),
                   std::int64_t volume_capacity = -1);
// Exact enclosed volume, via the divergence theorem over the facets.
double geometric_volume(const Uld& uld);

enum class CornerSupportMode { full, corners_only };

struct PackingParams {
  Coord max_padding_height = 10;
  double min_item_overlap = 0.9;
  double max_cog_deviation = 0.1;
  double weight_balance_importance = 0.5;
  CornerSupportMode corner_support_mode = CornerSupportMode::full;

  double volume_importance() const {
    return weight_balance_importance <= 1.0 ? 1.0 - weight_balance_importance : 0.0;
  }
};

struct Variants {
  bool no_grid = false;
  bool no_blocking = false;
  bool no_moving = false;
  bool crainic_mimic = false;
};

struct AlgoParams {
  std::uint64_t max_ep_checks = 20'000'000;
  int min_rgs_iters = 10;
  int max_rgs_iters = 500;
  double randomization_degree = 0.5;
  // Sort priority of the point store, most significant axis first.
  std::array<int, 3> ep_sort_order{kZ, kY, kX};
  std::uint64_t rng_seed = 0;
  int hole_close_max_iters = 100;
  Variants variants;
};

std::string sort_order_to_string(const std::array<int, 3>& order);
std::array<int, 3> sort_order_from_string(const std::string& s);

inline constexpr std::size_t kNoItem = std::numeric_limits<std::size_t>::max();

struct Placement {
  std::size_t item = kNoItem;  // index into the instance item list, kNoItem for dummies
  std::string label;           // dummy kind for dummies
  Orientation orientation{};
  Vec3 position{};
  Vec3 size{};
  std::int64_t weight = 0;
  bool stackable = true;
  bool dummy = false;

  Vec3 end_position() const { return position + size; }
  Box box() const { return {position, size}; }
  Coord volume() const { return size[0] * size[1] * size[2]; }
};

Placement make_placement(const std::vector<Item>& items, std::size_t index, const Orientation& o,
                         const Vec3& position);

struct UldLoad {
  std::size_t uld = 0;  // index into the ULD list it was solved against
  std::vector<Placement> placements;
  bool substructure_used = false;

  std::int64_t loaded_weight() const;
  Coord loaded_volume() const;
  std::size_t real_item_count() const;
  // Weighted centre over real items; nullopt when the real weight is zero.
  std::optional<Vec3d> center_of_gravity() const;
};

double volume_utilization(const UldLoad& load, const Uld& uld);

struct Score {
  double weight_balance = 0.0;
  double volume = 0.0;
  double penalty = 0.0;
  double total = 0.0;
};

struct UldGroup {
  Uld uld;
  std::optional<std::int64_t> count;  // nullopt: unlimited
};

// Search bookkeeping for one load.
struct LoadStats {
  std::string criterion;
  int runs = 0;
  std::uint64_t checks = 0;
};

struct Solution {
  std::vector<UldLoad> loads;
  std::vector<Score> scores;
  std::vector<LoadStats> stats;
  std::vector<std::size_t> unloaded;
};

}  // namespace uldpack
