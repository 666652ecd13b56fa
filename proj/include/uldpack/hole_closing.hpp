#pragma once

#include <cstddef>
#include <vector>

#include "uldpack/model.hpp"

namespace uldpack {

struct Hole {
  std::size_t placement;  // index into UldLoad::placements
  int axis;               // kX or kY
  int sign;               // +1 or -1
};

// Centerward direction of a placement along a horizontal axis.
int centerward_sign(const Placement& p, const Uld& uld, int axis);

bool has_hole(const UldLoad& load, const Uld& uld, std::size_t idx, int axis);
std::vector<Hole> find_holes(const UldLoad& load, const Uld& uld);

// Items to move together with placement l; empty when a member would sit lower than l.
std::vector<std::size_t> movable_set(const UldLoad& load, std::size_t l, Coord padding);

// Largest feasible shift of Q along axis*sign, applied to the load. Returns the shift.
Coord slide(UldLoad& load, const Uld& uld, const std::vector<std::size_t>& q, int axis, int sign,
            const PackingParams& params);

// Repeats detection and sliding until nothing moves or max_iters sweeps ran.
// Returns the number of sweeps performed.
int close_holes(UldLoad& load, const Uld& uld, const PackingParams& params, int max_iters);

}  // namespace uldpack
