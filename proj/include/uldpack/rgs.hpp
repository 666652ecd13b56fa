#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uldpack/item_ordering.hpp"
#include "uldpack/model.hpp"

namespace uldpack {

// Fit information for the remaining-item penalty: how many available ULD
// groups exist and how many of them each item fits into.
struct FitContext {
  std::size_t group_count = 1;
  std::vector<std::size_t> fit_count;  // indexed by item; missing entries count as group_count

  std::size_t fits(std::size_t item) const { return item < fit_count.size() ? fit_count[item] : group_count; }
};

// Normalised CoG offset along axis d (0 or 1), zeroed inside the tolerance band.
double cog_deviation(const UldLoad& load, const Uld& uld, int axis, double cog_max);

// Scores a load. `considered` are the items offered to the search.
Score score_load(const UldLoad& load, const Uld& uld, const std::vector<Item>& items,
                 std::span<const std::size_t> considered, const FitContext& fit, const PackingParams& params);

struct RgsResult {
  UldLoad load;
  Score score;
  SortCriterion criterion = SortCriterion::stackability_cumulated;
  int runs = 0;
  std::uint64_t checks = 0;
};

struct RgsOptions {
  std::uint64_t seed = 0;
  std::size_t uld_index = 0;
  bool hole_closing = true;
};

RgsResult run_rgs(const std::vector<Item>& items, std::span<const std::size_t> candidates, const Uld& uld,
                  const FitContext& fit, const PackingParams& packing, const AlgoParams& algo,
                  const RgsOptions& opt);

}  // namespace uldpack
