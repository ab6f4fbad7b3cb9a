#pragma once

#include <vector>

#include "ccx/curve.hpp"
#include "ccx/triangulation.hpp"
#include "ccx/walk.hpp"

namespace ccx {

// One normal arc of a traced multicurve: the piece inside one triangle
// between two consecutive edge crossings of a component's walk.
struct NormalArc {
  int tri = -1;
  int corner = -1;   // corner the arc clips
  long depth = -1;   // 0 = innermost at that corner
  int comp = -1;     // component index in the trace
  long idx = -1;     // arc index along that component's walk
  int side_in = -1;  // side entered through (= walk slot side)
  long local_in = -1;
  int side_out = -1; // side left through
  long local_out = -1;
};

// Arcs of every component, in traversal order per component.
std::vector<NormalArc> trace_arcs(const Triangulation& T, const Trace& tr);

// A crossing of one red arc with one blue arc. sign is +1 when, walking the
// triangle boundary counterclockwise from the red arc's entry endpoint, the
// blue arc's entry endpoint comes before the red exit endpoint (the two
// traversals then cross with a fixed relative orientation; the global
// meaning is pinned once by the torus calibration test).
struct ArcCrossing {
  long red_arc = -1;
  long blue_arc = -1;
  int sign = 0;
};

// Two multicurves over one triangulation in a chosen mutual position. The
// position is recorded as one gap per red point: the number of blue points
// preceding it along its edge's fwd direction, nondecreasing along each
// edge. Every transversal position of the pair arises from some gap vector;
// the default (all zeros, reds first everywhere) is the canonical placement,
// cheap and good enough for every placement-invariant construction.
class Overlay {
 public:
  Overlay(const Triangulation& T, const Coords& red, const Coords& blue);
  Overlay(const Triangulation& T, const Coords& red, const Coords& blue,
          std::vector<Int> red_gaps);

  const Triangulation& triangulation() const { return T_; }
  const Trace& red_trace() const { return red_trace_; }
  const Trace& blue_trace() const { return blue_trace_; }
  const std::vector<NormalArc>& red_arcs() const { return red_arcs_; }
  const std::vector<NormalArc>& blue_arcs() const { return blue_arcs_; }
  const std::vector<Int>& red_gaps() const { return red_gaps_; }

  const std::vector<ArcCrossing>& crossings() const { return crossings_; }
  // Crossing ids on each arc, ordered from the arc's entry endpoint.
  const std::vector<std::vector<long>>& crossings_on_red() const {
    return on_red_;
  }
  const std::vector<std::vector<long>>& crossings_on_blue() const {
    return on_blue_;
  }

  long count() const { return static_cast<long>(crossings_.size()); }
  // Sum of signs, orientations induced by the two traces. Placement
  // independent.
  long signed_sum() const;

  // Global arc index of arc `idx` of component `comp`.
  long red_arc_id(int comp, long idx) const;
  long blue_arc_id(int comp, long idx) const;

 private:
  const Triangulation& T_;
  Trace red_trace_, blue_trace_;
  std::vector<Int> red_gaps_;
  std::vector<NormalArc> red_arcs_, blue_arcs_;
  std::vector<long> red_arc_offset_, blue_arc_offset_;
  std::vector<ArcCrossing> crossings_;
  std::vector<std::vector<long>> on_red_, on_blue_;
};

// A minimising mutual position: the crossing count is the geometric
// intersection number of the two multicurve classes, and the gap vector
// realises it.
struct MinPlacement {
  Int count;
  std::vector<Int> gaps;
};

// Exact minimum over all placements. Some placement realises simultaneous
// minimal position (both curves stay embedded because self-orders are kept),
// and no transversal position beats the minimum. Requires few red points;
// callers shorten the lighter curve first. Blue may be arbitrarily heavy:
// only its corner counts enter the cost.
MinPlacement min_crossings_placement(const Triangulation& T, const Coords& red,
                                     const Coords& blue,
                                     int max_red_points = 6);
Int min_crossings_small_red(const Triangulation& T, const Coords& red,
                            const Coords& blue, int max_red_points = 6);

// One complementary region of the union of the two curves, cut open along
// them: a compact surface with `circles` frontier circles, `punctures` of
// the surface inside, and the given genus. circle_walks trace the frontier
// (each step an edge crossing next to a point of the union); their reduced
// classes are the region's boundary pushed slightly inside.
struct RegionReport {
  int genus = 0;
  int circles = 0;
  int punctures = 0;
  std::vector<int> puncture_ids;
  std::vector<Walk> circle_walks;
  long local_faces = 0;
};

// Complement structure of red ∪ blue at the overlay's placement. With an
// all-zero blue this is the complement of the single multicurve `red`.
std::vector<RegionReport> analyze_complement(const Overlay& ov);

}  // namespace ccx
