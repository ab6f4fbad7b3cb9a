#include "ccx/curve.hpp"

#include <algorithm>

namespace ccx {

namespace {
// Tracing walks every intersection point once; refuse weights that could not
// be walked in reasonable time or memory.
constexpr long kTraceLimit = 20'000'000;
}  // namespace

Int total_weight(const Coords& w) {
  Int s = 0;
  for (const Int& x : w) s += x;
  return s;
}

Int corner_count(const Triangulation& T, const Coords& w, int tri, int corner) {
  const Triangle& t = T.triangle(tri);
  const Int& before = w[t.side[(corner + 2) % 3].edge];
  const Int& after = w[t.side[corner].edge];
  const Int& far = w[t.side[(corner + 1) % 3].edge];
  return (before + after - far) / 2;
}

void validate_multicurve(const Triangulation& T, const Coords& w) {
  T.check_coords_shape(w);
  for (int t = 0; t < T.num_triangles(); ++t) {
    const Triangle& tr = T.triangle(t);
    Int sum = w[tr.side[0].edge] + w[tr.side[1].edge] + w[tr.side[2].edge];
    if (sum % 2 != 0)
      throw Error(ErrorKind::ParityViolation, "odd side sum at triangle " + std::to_string(t));
  }
  for (int t = 0; t < T.num_triangles(); ++t)
    for (int i = 0; i < 3; ++i)
      if (corner_count(T, w, t, i) < 0)
        throw Error(ErrorKind::CornerNegative,
                    "corner " + std::to_string(i) + " of triangle " + std::to_string(t));
}

int Trace::edge_of_point(long p) const {
  auto it = std::upper_bound(edge_offset.begin(), edge_offset.end(), p);
  return static_cast<int>(it - edge_offset.begin()) - 1;
}

namespace {

// A point seen from one of its two sides: the curve sits on edge position
// `local` of side `ref.side` and is about to cross triangle `ref.tri`.
struct Appearance {
  SlotRef ref;
  long local = -1;
  bool operator==(const Appearance&) const = default;
};

struct Walker {
  const Triangulation& T;
  std::vector<long> wl;       // weights as machine integers
  std::vector<long> corner;   // 3 per triangle

  long weight_of(SlotRef r) const { return wl[T.slot(r).edge]; }

  // The arc inside ref.tri starting at this appearance: first n_i positions of
  // side i clip corner i, the rest clip corner i+1.
  Appearance arc_partner(Appearance a) const {
    int t = a.ref.tri, i = a.ref.side;
    long ni = corner[3 * t + i];
    if (a.local < ni) {  // corner i arc, depth a.local
      int j = (i + 2) % 3;
      return Appearance{SlotRef{t, j}, wl[T.triangle(t).side[j].edge] - 1 - a.local};
    }
    long depth = weight_of(a.ref) - 1 - a.local;  // corner i+1 arc
    int j = (i + 1) % 3;
    return Appearance{SlotRef{t, j}, depth};
  }

  Appearance cross_edge(Appearance a) const {
    SlotRef o = T.opposite(a.ref);
    return Appearance{o, weight_of(a.ref) - 1 - a.local};
  }

  long point_id(const std::vector<long>& off, Appearance a) const {
    const Slot& s = T.slot(a.ref);
    long pos = s.fwd ? a.local : wl[s.edge] - 1 - a.local;
    return off[s.edge] + pos;
  }
};

}  // namespace

Trace trace_multicurve(const Triangulation& T, const Coords& w) {
  validate_multicurve(T, w);
  if (total_weight(w) > kTraceLimit)
    throw Error(ErrorKind::Unsupported, "total weight too large to trace");

  Walker walk{T, {}, {}};
  walk.wl.resize(T.num_edges());
  for (int e = 0; e < T.num_edges(); ++e) walk.wl[e] = to_long(w[e]);
  walk.corner.resize(3 * T.num_triangles());
  for (int t = 0; t < T.num_triangles(); ++t)
    for (int i = 0; i < 3; ++i) walk.corner[3 * t + i] = to_long(corner_count(T, w, t, i));

  Trace tr;
  tr.edge_offset.resize(T.num_edges());
  long total = 0;
  for (int e = 0; e < T.num_edges(); ++e) {
    tr.edge_offset[e] = total;
    total += walk.wl[e];
  }
  tr.total_points = total;

  std::vector<char> visited(total, 0);
  for (int e = 0; e < T.num_edges(); ++e) {
    for (long pos = 0; pos < walk.wl[e]; ++pos) {
      long start_point = tr.edge_offset[e] + pos;
      if (visited[start_point]) continue;
      TracedComponent comp;
      comp.coords.assign(T.num_edges(), 0);
      Appearance start{T.slots_of(e)[0], pos};
      Appearance cur = start;
      do {
        long p = walk.point_id(tr.edge_offset, cur);
        visited[p] = 1;
        comp.points.push_back(p);
        comp.slots.push_back(cur.ref);
        comp.coords[T.slot(cur.ref).edge] += 1;
        cur = walk.cross_edge(walk.arc_partner(cur));
      } while (!(cur == start));
      tr.components.push_back(std::move(comp));
    }
  }
  return tr;
}

std::optional<int> peripheral_vertex(const Triangulation& T, const Coords& w) {
  for (int v = 0; v < T.num_vertices(); ++v)
    if (T.vertex_link(v) == w) return v;
  return std::nullopt;
}

Trace validate_curve(const Triangulation& T, const Coords& w) {
  validate_multicurve(T, w);
  if (total_weight(w) == 0) throw Error(ErrorKind::NullHomotopic, "zero coordinate vector");
  Trace tr = trace_multicurve(T, w);
  if (tr.components.size() != 1)
    throw Error(ErrorKind::Disconnected,
                std::to_string(tr.components.size()) + " components, expected 1");
  if (auto v = peripheral_vertex(T, w))
    throw Error(ErrorKind::Peripheral, "curve is the link of puncture " + std::to_string(*v));
  return tr;
}

bool is_essential_curve(const Triangulation& T, const Coords& w) {
  try {
    validate_curve(T, w);
    return true;
  } catch (const Error& err) {
    switch (err.kind()) {
      case ErrorKind::ParityViolation:
      case ErrorKind::CornerNegative:
      case ErrorKind::NullHomotopic:
      case ErrorKind::Disconnected:
      case ErrorKind::Peripheral:
        return false;
      default:
        throw;
    }
  }
}

}  // namespace ccx
