#include "ccx/mapping_class.hpp"

#include <stdexcept>
#include <utility>

#include "ccx/errors.hpp"
#include "ccx/overlay.hpp"
#include "ccx/walk.hpp"

namespace ccx {

namespace {

// The full cycle of `w` starting after arc `idx`, once per requested pass.
// Forward follows the walk's own orientation; backward runs it against,
// entering each triangle through the side the forward walk left it by.
void append_loop(const Triangulation& T, const std::vector<SlotRef>& w,
                 long idx, bool forward, long passes,
                 std::vector<SlotRef>& out) {
  long m = static_cast<long>(w.size());
  for (long pass = 0; pass < passes; ++pass) {
    if (forward) {
      for (long k = 1; k <= m; ++k) out.push_back(w[(idx + k) % m]);
    } else {
      for (long k = 0; k < m; ++k)
        out.push_back(T.opposite(w[((idx - k) % m + m) % m]));
    }
  }
}

}  // namespace

Coords twist_image(const Triangulation& T, const Coords& about,
                   const Coords& target, long n) {
  T.check_coords_shape(about);
  T.check_coords_shape(target);
  if (n == 0) {
    validate_multicurve(T, target);
    return target;
  }
  bool zero = true;
  for (const Int& v : about)
    if (v != 0) zero = false;
  if (zero) {
    validate_multicurve(T, target);
    return target;
  }

  Overlay ov(T, target, about);
  if (ov.blue_trace().components.size() != 1)
    throw Error(ErrorKind::Disconnected, "twisting along a multicurve");
  const std::vector<SlotRef>& loop = ov.blue_trace().components[0].slots;

  Coords out(T.num_edges(), 0);
  long passes = n < 0 ? -n : n;
  for (int ci = 0; ci < static_cast<int>(ov.red_trace().components.size());
       ++ci) {
    const TracedComponent& comp = ov.red_trace().components[ci];
    std::vector<SlotRef> steps;
    long narcs = static_cast<long>(comp.slots.size());
    for (long j = 0; j < narcs; ++j) {
      steps.push_back(comp.slots[j]);
      long arc = ov.red_arc_id(ci, j);
      for (long xid : ov.crossings_on_red()[arc]) {
        const ArcCrossing& x = ov.crossings()[xid];
        bool forward = (x.sign > 0) == (n > 0);
        append_loop(T, loop, ov.blue_arcs()[x.blue_arc].idx, forward, passes,
                    steps);
      }
    }
    Walk spliced{std::move(steps)};
    validate_walk(T, spliced);
    Coords c = walk_coords(T, reduce_walk(T, spliced));
    for (int e = 0; e < T.num_edges(); ++e) out[e] += c[e];
  }
  validate_multicurve(T, out);
  return out;
}

MappingClass MappingClass::twist(const Coords& about, long power) {
  MappingClass f;
  if (power != 0) f.word_.push_back(TwistGen{about, power});
  return f;
}

MappingClass MappingClass::then(const MappingClass& g) const {
  MappingClass h = *this;
  h.word_.insert(h.word_.end(), g.word_.begin(), g.word_.end());
  return h;
}

MappingClass MappingClass::inverse() const {
  MappingClass h;
  h.word_.assign(word_.rbegin(), word_.rend());
  for (TwistGen& g : h.word_) g.power = -g.power;
  return h;
}

MappingClass MappingClass::power(long n) const {
  MappingClass base = n < 0 ? inverse() : *this;
  long reps = n < 0 ? -n : n;
  MappingClass h;
  for (long i = 0; i < reps; ++i) h = h.then(base);
  return h;
}

Coords MappingClass::apply(const Triangulation& T, const Coords& x) const {
  Coords cur = x;
  for (const TwistGen& g : word_)
    cur = twist_image(T, g.about, cur, g.power);
  return cur;
}

}  // namespace ccx
