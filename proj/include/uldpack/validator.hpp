#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "uldpack/model.hpp"

namespace uldpack {

struct Violation {
  std::string kind;
  std::string detail;
  bool hard = true;
  std::size_t load = 0;
  std::size_t placement = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool feasible() const;
  bool cog_ok() const;
  std::size_t hard_count() const;
};

// Area of the candidate footprint whose topmost surface within
// [z - padding, z] belongs to a stackable box (the floor is stackable).
// Computed exactly by coordinate compression.
struct SurfaceBox {
  Box box;
  bool stackable = true;
};

Coord exact_supported_area(std::span<const SurfaceBox> boxes, const Vec3& bbox, const Box& candidate,
                           Coord padding);

// Checks one load by brute force: orientation, containment, edge zone,
// collisions, support and stacking, capacities. CoG outside the band is a
// soft violation.
ValidationReport validate_load(const UldLoad& load, const Uld& uld, const std::vector<Item>& items,
                               const PackingParams& params, std::size_t load_index = 0);

// Adds item multiplicity and ULD availability checks across loads.
ValidationReport validate_solution(const Solution& solution, const std::vector<UldGroup>& groups,
                                   const std::vector<Item>& items, const PackingParams& params);

}  // namespace uldpack
