#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uldpack/model.hpp"
#include "uldpack/rgs.hpp"

namespace uldpack {

// Whether the item alone can be loaded in an empty, adapted copy of the ULD.
bool item_fits_group(const Item& item, const Uld& uld, const PackingParams& params);

// fits[i][g]: item i fits group g.
std::vector<std::vector<bool>> fit_matrix(const std::vector<Item>& items, const std::vector<UldGroup>& groups,
                                          const PackingParams& params);

// Group to load next among `available`, or nullopt when no remaining item
// fits any of them.
std::optional<std::size_t> select_next_uld(const std::vector<Item>& items, std::span<const std::size_t> remaining,
                                           const std::vector<UldGroup>& groups, std::span<const std::size_t> available,
                                           const std::vector<std::vector<bool>>& fits);

struct FleetOptions {
  bool reload = true;
  bool hole_closing = true;
};

Solution load_fleet(const std::vector<Item>& items, const std::vector<UldGroup>& groups,
                    const PackingParams& packing, const AlgoParams& algo, const FleetOptions& opt = {});

}  // namespace uldpack
