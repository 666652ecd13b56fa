#include "uldpack/rgs.hpp"

#include <algorithm>
#include <cmath>

#include "uldpack/feasibility.hpp"
#include "uldpack/hole_closing.hpp"
#include "uldpack/insertion.hpp"
#include "uldpack/rng.hpp"

namespace uldpack {

double cog_deviation(const UldLoad& load, const Uld& uld, int axis, double cog_max) {
  const auto cog = load.center_of_gravity();
  if (!cog) return 0.0;
  const double half = static_cast<double>(uld.bounding_box[axis]) / 2.0;
  const double dev = std::abs(((*cog)[axis] - half) / half);
  return dev > cog_max ? dev : 0.0;
}

Score score_load(const UldLoad& load, const Uld& uld, const std::vector<Item>& items,
                 std::span<const std::size_t> considered, const FitContext& fit, const PackingParams& params) {
  Score s;
  s.weight_balance = 1.0 - (cog_deviation(load, uld, kX, params.max_cog_deviation) +
                            cog_deviation(load, uld, kY, params.max_cog_deviation)) /
                               2.0;
  s.volume = uld.volume_capacity > 0
                 ? static_cast<double>(load.loaded_volume()) / static_cast<double>(uld.volume_capacity)
                 : 0.0;
  std::vector<bool> loaded(items.size(), false);
  for (const Placement& p : load.placements)
    if (!p.dummy && p.item < items.size()) loaded[p.item] = true;
  double num = 0.0, den = 0.0;
  for (std::size_t i : considered) {
    const double g = static_cast<double>(fit.group_count) - static_cast<double>(fit.fits(i));
    const double term = g * static_cast<double>(items[i].volume());
    den += term;
    if (!loaded[i]) num += term;
  }
  s.penalty = den != 0.0 ? num / den : 0.0;
  s.total = params.weight_balance_importance * s.weight_balance + params.volume_importance() * s.volume - s.penalty;
  return s;
}

RgsResult run_rgs(const std::vector<Item>& items, std::span<const std::size_t> candidates, const Uld& uld,
                  const FitContext& fit, const PackingParams& packing, const AlgoParams& algo,
                  const RgsOptions& opt) {
  struct Cell {
    bool substructure;
    SortCriterion criterion;
    int criterion_index;
    int runs = 1;
  };
  std::vector<Cell> cells;
  const bool sub_possible = uld.substructure_allowed && uld.edge_offset > 0;
  for (int b = 0; b < (sub_possible ? 2 : 1); ++b)
    for (int c = 0; c < static_cast<int>(kAllCriteria.size()); ++c) cells.push_back({b == 1, kAllCriteria[c], c});

  CheckCounter counter(algo.max_ep_checks);
  const std::optional<double> cell_size = solver_cell_size(items, algo);
  int completed = 0;

  const auto run_once = [&](const Cell& cell, int j, bool may_abort) {
    SplitMix64 rng(derive_seed(opt.seed, {cell.substructure ? 1u : 0u, static_cast<std::uint64_t>(cell.criterion_index),
                                          static_cast<std::uint64_t>(j)}));
    InsertionOptions io;
    io.criterion = cell.criterion;
    io.rho = j == 1 ? 0.0 : algo.randomization_degree;
    io.use_substructure = cell.substructure;
    io.cell_size = cell_size;
    io.abort_on_budget = may_abort;
    UldLoad l = load_single_uld(items, candidates, uld, opt.uld_index, packing, algo, io, rng, counter);
    ++completed;
    return l;
  };

  // Deterministic first runs of every cell are always executed; their cost
  // sets how many randomised runs the remaining budget affords.
  std::vector<UldLoad> first;
  first.reserve(cells.size());
  for (const Cell& cell : cells) first.push_back(run_once(cell, 1, false));
  const int ncells = static_cast<int>(cells.size());
  const double per_run = std::max(1.0, static_cast<double>(counter.used()) / ncells);
  const double affordable = static_cast<double>(counter.remaining()) / per_run;
  const long long wanted = ncells + static_cast<long long>(std::floor(affordable));
  const int m_min = std::max(algo.min_rgs_iters, ncells);
  const int m_max = std::max(algo.max_rgs_iters, m_min);
  const int m = static_cast<int>(std::clamp<long long>(wanted, m_min, m_max));
  for (int c = 0; c < ncells; ++c) cells[c].runs = m / ncells + (c < m % ncells ? 1 : 0);

  RgsResult best;
  bool have_best = false;
  const auto consider = [&](UldLoad&& l, const Cell& cell) {
    const Score s = score_load(l, uld, items, candidates, fit, packing);
    if (!have_best || s.total > best.score.total) {
      best.load = std::move(l);
      best.score = s;
      best.criterion = cell.criterion;
      have_best = true;
    }
  };
  for (int c = 0; c < ncells; ++c) {
    consider(std::move(first[c]), cells[c]);
    for (int j = 2; j <= cells[c].runs; ++j) {
      const bool guaranteed = completed < algo.min_rgs_iters;
      if (!guaranteed && counter.exhausted()) break;
      consider(run_once(cells[c], j, !guaranteed), cells[c]);
    }
  }
  best.runs = completed;
  best.checks = counter.used();
  if (opt.hole_closing && best.load.real_item_count() > 0) {
    close_holes(best.load, uld, packing, algo.hole_close_max_iters);
    best.score = score_load(best.load, uld, items, candidates, fit, packing);
  }
  return best;
}

}  // namespace uldpack
