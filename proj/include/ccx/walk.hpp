#pragma once

#include <vector>

#include "ccx/curve.hpp"
#include "ccx/triangulation.hpp"

namespace ccx {

// A closed curve recorded as the cyclic sequence of its edge crossings:
// step i is the slot through which the curve enters its next triangle.
// Between steps i and i+1 the curve runs inside triangle steps[i].tri,
// having entered across side steps[i].side.
struct Walk {
  std::vector<SlotRef> steps;
  bool operator==(const Walk&) const = default;
};

// Consecutive-step condition: opposite(steps[i+1]) is a slot of steps[i].tri.
void validate_walk(const Triangulation& T, const Walk& w);

// Removes backtracks (leaving through the side just entered) until none
// remain, cyclically. The reduced word is the unique minimal representative
// of the free homotopy class: in the universal cover the dual graph of an
// ideal triangulation is a tree, so backtrack-free means geodesic. Empty
// output = null-homotopic input.
Walk reduce_walk(const Triangulation& T, Walk w);

// Edge crossing counts. For a reduced walk these are the normal coordinates
// of its free homotopy class.
Coords walk_coords(const Triangulation& T, const Walk& w);

// Rotation-minimal form, for use as a set/map key.
Walk canonical_rotation(const Walk& w);

}  // namespace ccx
