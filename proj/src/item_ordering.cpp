#include "uldpack/item_ordering.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace uldpack {

const char* to_string(SortCriterion c) {
  switch (c) {
    case SortCriterion::stackability_cumulated: return "stackability_cumulated_volume";
    case SortCriterion::stackability_highest: return "stackability_highest_volume";
    case SortCriterion::cumulated_volume: return "cumulated_volume";
    case SortCriterion::highest_volume: return "highest_volume";
    case SortCriterion::random: return "random";
  }
  return "random";
}

SortCriterion criterion_from_string(const std::string& s) {
  for (SortCriterion c : kAllCriteria)
    if (s == to_string(c)) return c;
  throw ModelError("unknown sorting criterion '" + s + "'");
}

bool can_realize_height(const Item& item, Coord h) {
  if (item.size[2] == h) return true;
  return item.tiltable && (item.size[0] == h || item.size[1] == h);
}

std::vector<Orientation> orientations_for(const Item& item, Coord h) {
  for (Tilt t : {Tilt::none, Tilt::across_x, Tilt::across_y}) {
    const Orientation o{t, false};
    if (!is_admissible(item, o)) continue;
    const Vec3 s = oriented_size(item.size, o);
    if (s[2] != h) continue;
    std::vector<Orientation> out{o};
    if (item.rotatable && s[0] != s[1]) out.push_back({t, true});
    return out;
  }
  throw ModelError("item " + item.id + " cannot be oriented to height " + std::to_string(h));
}

Groups build_groups(const std::vector<Item>& items, std::span<const std::size_t> subset) {
  using Key = std::tuple<std::int64_t, bool, bool, bool, Vec3>;
  std::map<Key, std::size_t> index;
  Groups g;
  std::vector<std::size_t> sorted_subset(subset.begin(), subset.end());
  std::sort(sorted_subset.begin(), sorted_subset.end());
  for (std::size_t i : sorted_subset) {
    const Item& it = items.at(i);
    Vec3 dims = it.size;
    std::sort(dims.begin(), dims.end());
    const Key k{it.weight, it.rotatable, it.tiltable, it.stackable, dims};
    auto [pos, fresh] = index.try_emplace(k, g.identical.size());
    if (fresh) {
      IdenticalGroup ig;
      ig.dims = dims;
      ig.stackable = it.stackable;
      g.identical.push_back(ig);
    }
    IdenticalGroup& ig = g.identical[pos->second];
    ig.members.push_back(i);
    ig.cumulated_volume += it.volume();
    ig.highest_volume = std::max(ig.highest_volume, it.volume());
  }
  // Similar groups keyed by (height, stackability), in order of first appearance.
  std::map<std::pair<Coord, bool>, std::size_t> sim_index;
  for (std::size_t gi = 0; gi < g.identical.size(); ++gi) {
    std::set<Coord> heights;
    for (std::size_t i : g.identical[gi].members) {
      const Item& it = items[i];
      for (Coord h : it.size)
        if (can_realize_height(it, h)) heights.insert(h);
    }
    for (Coord h : heights) {
      auto [pos, fresh] = sim_index.try_emplace({h, g.identical[gi].stackable}, g.similar.size());
      if (fresh) g.similar.push_back({h, g.identical[gi].stackable, {}});
      g.similar[pos->second].groups.push_back(gi);
    }
  }
  return g;
}

namespace {

bool uses_stackability(SortCriterion c) {
  return c == SortCriterion::stackability_cumulated || c == SortCriterion::stackability_highest;
}

bool uses_cumulated(SortCriterion c) {
  return c == SortCriterion::stackability_cumulated || c == SortCriterion::cumulated_volume;
}

template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace

std::vector<OrderEntry> build_order(const std::vector<Item>& items, std::span<const std::size_t> subset,
                                    SortCriterion criterion, double rho, SplitMix64& rng) {
  Groups g = build_groups(items, subset);
  const auto group_key = [&](std::size_t gi) {
    const IdenticalGroup& ig = g.identical[gi];
    return uses_cumulated(criterion) ? ig.cumulated_volume : ig.highest_volume;
  };

  struct SimKey {
    Coord value = 0;
    std::size_t first_item = 0;
  };
  std::vector<SimKey> sim_keys(g.similar.size());
  for (std::size_t s = 0; s < g.similar.size(); ++s) {
    SimKey k{0, kNoItem};
    for (std::size_t gi : g.similar[s].groups) {
      const IdenticalGroup& ig = g.identical[gi];
      k.value = uses_cumulated(criterion) ? k.value + ig.cumulated_volume : std::max(k.value, ig.highest_volume);
      k.first_item = std::min(k.first_item, ig.members.front());
    }
    sim_keys[s] = k;
  }

  std::vector<std::size_t> sim_order(g.similar.size());
  for (std::size_t s = 0; s < sim_order.size(); ++s) sim_order[s] = s;
  if (criterion == SortCriterion::random) {
    shuffle(sim_order, rng);
    for (auto& sg : g.similar) shuffle(sg.groups, rng);
  } else {
    const bool stack_first = uses_stackability(criterion);
    std::sort(sim_order.begin(), sim_order.end(), [&](std::size_t a, std::size_t b) {
      const SimilarGroup& sa = g.similar[a];
      const SimilarGroup& sb = g.similar[b];
      if (stack_first && sa.stackable != sb.stackable) return sa.stackable;
      if (sim_keys[a].value != sim_keys[b].value) return sim_keys[a].value > sim_keys[b].value;
      if (sim_keys[a].first_item != sim_keys[b].first_item) return sim_keys[a].first_item < sim_keys[b].first_item;
      return sa.height > sb.height;
    });
    for (auto& sg : g.similar) {
      std::sort(sg.groups.begin(), sg.groups.end(), [&](std::size_t a, std::size_t b) {
        if (group_key(a) != group_key(b)) return group_key(a) > group_key(b);
        return g.identical[a].members.front() < g.identical[b].members.front();
      });
    }
  }

  if (rho > 0.0) {
    const UniformSource u = [&rng] { return rng.uniform_open_closed(); };
    if (uses_stackability(criterion)) {
      std::vector<std::size_t> stack, nonstack;
      for (std::size_t s : sim_order) (g.similar[s].stackable ? stack : nonstack).push_back(s);
      stack = randomize(stack, rho, u);
      nonstack = randomize(nonstack, rho, u);
      sim_order = stack;
      sim_order.insert(sim_order.end(), nonstack.begin(), nonstack.end());
    } else {
      sim_order = randomize(sim_order, rho, u);
    }
    for (std::size_t s : sim_order) g.similar[s].groups = randomize(g.similar[s].groups, rho, u);
  }

  std::vector<OrderEntry> out;
  for (std::size_t s : sim_order) {
    const SimilarGroup& sg = g.similar[s];
    for (std::size_t gi : sg.groups) {
      for (std::size_t i : g.identical[gi].members) {
        if (!can_realize_height(items[i], sg.height)) continue;
        out.push_back({i, orientations_for(items[i], sg.height), sg.height});
      }
    }
  }
  return out;
}

}  // namespace uldpack
