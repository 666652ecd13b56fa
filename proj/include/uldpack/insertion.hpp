#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uldpack/extreme_points.hpp"
#include "uldpack/feasibility.hpp"
#include "uldpack/item_ordering.hpp"
#include "uldpack/model.hpp"
#include "uldpack/rng.hpp"

namespace uldpack {

// Edge frames (non-stackable, height offset-1) and optionally the stackable
// substructure. Throws ModelError if a substructure is requested but not allowed.
std::vector<Placement> adapt_uld(const Uld& uld, bool use_substructure);

// One run of the first-fit heuristic on a single ULD.
class InsertionRun {
 public:
  InsertionRun(const Uld& uld, const std::vector<Item>& items, const PackingParams& packing,
               const AlgoParams& algo, std::optional<double> cell_size, bool use_substructure);

  // Tries the item at every point in store order. Returns true if it was loaded.
  bool try_insert(std::size_t item, std::span<const Orientation> orientations, CheckCounter* counter);
  // Accepts a placement unconditionally and updates the point set.
  void place(Placement p);

  const EpStore& points() const { return points_; }
  const LoadState& state() const { return state_; }
  bool aborted() const { return aborted_; }
  // Stop at the first check that finds the counter exhausted.
  void set_abort_on_budget(bool v) { abort_on_budget_ = v; }

  UldLoad to_load(std::size_t uld_index) const;

 private:
  const Uld* uld_;
  const std::vector<Item>* items_;
  AlgoParams algo_;
  LoadState state_;
  EpStore points_;
  bool substructure_ = false;
  bool aborted_ = false;
  bool abort_on_budget_ = true;
};

struct InsertionOptions {
  SortCriterion criterion = SortCriterion::stackability_cumulated;
  double rho = 0.0;
  bool use_substructure = false;
  std::optional<double> cell_size;  // nullopt: naive scans
  bool abort_on_budget = true;
};

UldLoad load_single_uld(const std::vector<Item>& items, std::span<const std::size_t> subset, const Uld& uld,
                        std::size_t uld_index, const PackingParams& packing, const AlgoParams& algo,
                        const InsertionOptions& opt, SplitMix64& rng, CheckCounter& counter,
                        bool* aborted = nullptr);

// Cell size used by the solver for an instance, or nullopt for the no-grid variant.
std::optional<double> solver_cell_size(const std::vector<Item>& items, const AlgoParams& algo);

}  // namespace uldpack
