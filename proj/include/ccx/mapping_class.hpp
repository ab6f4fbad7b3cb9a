#pragma once

#include <vector>

#include "ccx/curve.hpp"
#include "ccx/triangulation.hpp"

namespace ccx {

// Image of `target` under the n-th power of the twist about `about`.
//
// Works on any transversal position of the pair: at each crossing the target
// strand is rerouted once around the twisting curve, with the side chosen
// from the crossing sign so that every strand turns the same geometric way.
// Crossing pairs that a better position would cancel insert loops that the
// walk reduction removes again, so the canonical placement suffices and the
// result is exact. Twisting about a peripheral curve or along a disjoint one
// returns the target unchanged.
Coords twist_image(const Triangulation& T, const Coords& about,
                   const Coords& target, long n);

// A word of twist powers acting on multicurves. Generators apply in storage
// order: apply(x) feeds x to word[0] first.
class MappingClass {
 public:
  struct TwistGen {
    Coords about;
    long power = 0;
  };

  static MappingClass identity() { return MappingClass{}; }
  static MappingClass twist(const Coords& about, long power);

  // h = this->then(g) acts as h(x) = g(this(x)).
  MappingClass then(const MappingClass& g) const;
  MappingClass inverse() const;
  MappingClass power(long n) const;

  bool trivial_word() const { return word_.empty(); }
  const std::vector<TwistGen>& word() const { return word_; }

  Coords apply(const Triangulation& T, const Coords& x) const;

 private:
  std::vector<TwistGen> word_;
};

}  // namespace ccx
