#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "ccx/integer.hpp"
#include "ccx/triangulation.hpp"

namespace ccx {

// A simple closed curve in normal form. Normal coordinates determine the
// isotopy class, so the vector is the identity.
struct Curve {
  Coords w;
  auto operator<=>(const Curve&) const = default;
};

struct CurveHash {
  std::size_t operator()(const Curve& c) const { return hash_coords(c.w); }
};

// Parity and corner admissibility; throws ParityViolation / CornerNegative /
// IncompatibleTriangulation. Zero vectors and peripheral pieces pass here.
void validate_multicurve(const Triangulation& T, const Coords& w);

// Corner count at corner i of triangle t: arcs clipping that corner.
Int corner_count(const Triangulation& T, const Coords& w, int tri, int corner);

// One traced component: its own normal coordinates and the cyclic list of
// intersection points it runs through. Point id = edge_offset[e] + position,
// where positions along an edge are numbered from the start of its fwd slot.
// slots[k] is the slot the component crosses into at points[k], so `slots`
// is the component's walk.
struct TracedComponent {
  Coords coords;
  std::vector<long> points;
  std::vector<SlotRef> slots;
};

struct Trace {
  std::vector<long> edge_offset;
  long total_points = 0;
  std::vector<TracedComponent> components;

  int edge_of_point(long p) const;
};

// Decomposes an admissible multicurve into components. Cost is linear in the
// total weight; refuses absurd weights rather than thrashing.
Trace trace_multicurve(const Triangulation& T, const Coords& w);

// Vertex whose link these coordinates are, if any.
std::optional<int> peripheral_vertex(const Triangulation& T, const Coords& w);

// Full single-curve validation: admissible, nonzero, one component, not a
// vertex link. Returns the trace. Throws the matching ErrorKind otherwise.
Trace validate_curve(const Triangulation& T, const Coords& w);

bool is_essential_curve(const Triangulation& T, const Coords& w);

Int total_weight(const Coords& w);

}  // namespace ccx
