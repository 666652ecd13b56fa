#include "uldpack/fleet.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>

#include "uldpack/feasibility.hpp"
#include "uldpack/insertion.hpp"
#include "uldpack/rng.hpp"

namespace uldpack {

bool item_fits_group(const Item& item, const Uld& uld, const PackingParams& params) {
  if (item.weight > uld.weight_capacity || item.volume() > uld.volume_capacity) return false;
  const std::vector<Item> single{item};
  AlgoParams algo;
  for (int b = 0; b < (uld.substructure_allowed && uld.edge_offset > 0 ? 2 : 1); ++b) {
    InsertionRun run(uld, single, params, algo, std::nullopt, b == 1);
    for (const Orientation& o : admissible_orientations(item)) {
      const Vec3 size = oriented_size(item.size, o);
      for (const ExtremePoint& e : run.points().ordered()) {
        if (can_load_at(run.state(), item, size, move_point(e, size, uld))) return true;
        if (can_load_at(run.state(), item, size, e.coords)) return true;
      }
    }
  }
  return false;
}

std::vector<std::vector<bool>> fit_matrix(const std::vector<Item>& items, const std::vector<UldGroup>& groups,
                                          const PackingParams& params) {
  std::vector<std::vector<bool>> fits(items.size(), std::vector<bool>(groups.size(), false));
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t g = 0; g < groups.size(); ++g) fits[i][g] = item_fits_group(items[i], groups[g].uld, params);
  return fits;
}

std::optional<std::size_t> select_next_uld(const std::vector<Item>& items, std::span<const std::size_t> remaining,
                                           const std::vector<UldGroup>& groups, std::span<const std::size_t> available,
                                           const std::vector<std::vector<bool>>& fits) {
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (std::size_t i : remaining) {
    std::size_t n = 0;
    for (std::size_t g : available) n += fits[i][g] ? 1 : 0;
    if (n > 0) m = std::min(m, n);
  }
  if (m == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  std::vector<bool> in_u(groups.size(), false);
  for (std::size_t i : remaining) {
    std::size_t n = 0;
    for (std::size_t g : available) n += fits[i][g] ? 1 : 0;
    if (n != m) continue;
    for (std::size_t g : available)
      if (fits[i][g]) in_u[g] = true;
  }
  std::optional<std::size_t> best;
  Coord best_fit = -1;
  for (std::size_t g : available) {
    if (!in_u[g]) continue;
    Coord v = 0;
    for (std::size_t i : remaining)
      if (fits[i][g]) v += items[i].volume();
    const bool better = !best || v > best_fit ||
                        (v == best_fit && groups[g].uld.volume_capacity > groups[*best].uld.volume_capacity);
    if (better) {
      best = g;
      best_fit = v;
    }
  }
  return best;
}

namespace {

FitContext make_fit(const std::vector<std::vector<bool>>& fits, std::span<const std::size_t> available,
                    std::size_t n_items) {
  FitContext f;
  f.group_count = available.size();
  f.fit_count.assign(n_items, 0);
  for (std::size_t i = 0; i < n_items; ++i)
    for (std::size_t g : available) f.fit_count[i] += fits[i][g] ? 1 : 0;
  return f;
}

std::vector<std::size_t> loaded_items(const UldLoad& l) {
  std::vector<std::size_t> out;
  for (const Placement& p : l.placements)
    if (!p.dummy) out.push_back(p.item);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Solution load_fleet(const std::vector<Item>& items, const std::vector<UldGroup>& groups, const PackingParams& packing,
                    const AlgoParams& algo, const FleetOptions& opt) {
  const auto fits = fit_matrix(items, groups, packing);
  std::vector<std::int64_t> left(groups.size());
  std::vector<bool> unlimited(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    unlimited[g] = !groups[g].count.has_value();
    left[g] = groups[g].count.value_or(0);
  }
  std::vector<bool> dropped(groups.size(), false);
  const auto available = [&] {
    std::vector<std::size_t> a;
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (!dropped[g] && (unlimited[g] || left[g] > 0)) a.push_back(g);
    return a;
  };

  std::vector<std::size_t> remaining(items.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  Solution sol;
  std::uint64_t cycle = 0;
  while (!remaining.empty()) {
    const std::vector<std::size_t> avail = available();
    if (avail.empty()) break;
    const auto g = select_next_uld(items, remaining, groups, avail, fits);
    if (!g) break;
    RgsOptions ro;
    ro.seed = derive_seed(algo.rng_seed, {cycle++});
    ro.uld_index = *g;
    ro.hole_closing = opt.hole_closing;
    RgsResult r = run_rgs(items, remaining, groups[*g].uld, make_fit(fits, avail, items.size()), packing, algo, ro);
    const std::vector<std::size_t> got = loaded_items(r.load);
    if (got.empty()) {
      dropped[*g] = true;
      continue;
    }
    if (!unlimited[*g]) --left[*g];
    std::vector<std::size_t> next;
    std::set_difference(remaining.begin(), remaining.end(), got.begin(), got.end(), std::back_inserter(next));
    remaining = std::move(next);
    sol.loads.push_back(std::move(r.load));
    sol.scores.push_back(r.score);
    sol.stats.push_back({to_string(r.criterion), r.runs, r.checks});
  }

  if (opt.reload && !sol.loads.empty()) {
    const std::vector<std::size_t> last_items = loaded_items(sol.loads.back());
    const std::size_t last_g = sol.loads.back().uld;
    if (!unlimited[last_g]) ++left[last_g];
    std::vector<std::size_t> avail = available();
    std::vector<std::size_t> smaller;
    for (std::size_t g : avail)
      if (groups[g].uld.volume_capacity < groups[last_g].uld.volume_capacity) smaller.push_back(g);
    std::stable_sort(smaller.begin(), smaller.end(), [&](std::size_t a, std::size_t b) {
      return groups[a].uld.volume_capacity < groups[b].uld.volume_capacity;
    });
    bool replaced = false;
    for (std::size_t g : smaller) {
      const bool all_fit = std::all_of(last_items.begin(), last_items.end(), [&](std::size_t i) { return fits[i][g]; });
      if (!all_fit) continue;
      RgsOptions ro;
      ro.seed = derive_seed(algo.rng_seed, {cycle++, 0x5eedULL});
      ro.uld_index = g;
      ro.hole_closing = opt.hole_closing;
      RgsResult r = run_rgs(items, last_items, groups[g].uld, make_fit(fits, avail, items.size()), packing, algo, ro);
      if (loaded_items(r.load).size() != last_items.size()) continue;
      if (!unlimited[g]) --left[g];
      sol.loads.back() = std::move(r.load);
      sol.scores.back() = r.score;
      sol.stats.back() = {to_string(r.criterion), r.runs, r.checks};
      replaced = true;
      break;
    }
    if (!replaced && !unlimited[last_g]) --left[last_g];
  }
  sol.unloaded = remaining;
  return sol;
}

}  // namespace uldpack
