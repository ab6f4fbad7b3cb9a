#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ccx/curve.hpp"
#include "ccx/triangulation.hpp"

namespace ccx {

// A multicurve carried to a flip-equivalent triangulation where its total
// weight is locally minimal: no flip decreases it, even after wandering a
// bounded plateau of weight-preserving flips.
struct Shortened {
  Triangulation T;
  std::vector<int> flips;  // edges flipped, in order, starting from the input
  Coords w;
};

Shortened shorten_curve(const Triangulation& T, const Coords& w,
                        int plateau_states = 4096, int plateau_depth = 32);

// Carries coordinates through a recorded flip sequence.
Coords transport_coords(const Triangulation& T, const std::vector<int>& flips,
                        const Coords& w);

// Exact geometric intersection number of two multicurves: the lighter curve
// is shortened, the other carried along, and the crossing count minimised
// over all mutual placements. Component pairs are handled independently.
Int geometric_intersection(const Triangulation& T, const Coords& a,
                           const Coords& b);

// Signed crossing sum with orientations induced by the traces. Placement
// independent, so the canonical placement is used.
long algebraic_intersection(const Triangulation& T, const Coords& a,
                            const Coords& b);

// Memoises component-pair intersections across many queries on one
// triangulation.
class IntersectionCache {
 public:
  explicit IntersectionCache(Triangulation T);

  const Triangulation& triangulation() const { return T_; }
  Int geometric(const Coords& a, const Coords& b);
  bool disjoint(const Coords& a, const Coords& b);

 private:
  Int component_pair(const Coords& a, const Coords& b);

  Triangulation T_;
  std::unordered_map<std::string, Int> memo_;
};

}  // namespace ccx
