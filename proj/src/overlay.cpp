#include "ccx/overlay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "ccx/errors.hpp"

namespace ccx {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) throw std::logic_error(msg);
}

long points_on_edge(const Trace& tr, int e) {
  long next = (e + 1 < static_cast<int>(tr.edge_offset.size()))
                  ? tr.edge_offset[e + 1]
                  : tr.total_points;
  return next - tr.edge_offset[e];
}

long fwd_pos(const Trace& tr, long p) {
  return p - tr.edge_offset[tr.edge_of_point(p)];
}

// Position of point p counted from the start corner of slot r.
long slot_local(const Triangulation& T, const Trace& tr, long p, SlotRef r) {
  const Slot& s = T.slot(r);
  long pos = fwd_pos(tr, p);
  return s.fwd ? pos : points_on_edge(tr, s.edge) - 1 - pos;
}

long corner_count_of_trace(const Triangulation& T, const Trace& tr, int tri,
                           int corner) {
  long w[3];
  for (int i = 0; i < 3; ++i)
    w[i] = points_on_edge(tr, T.triangle(tri).side[i].edge);
  int i = corner;
  return (w[(i + 2) % 3] + w[i] - w[(i + 1) % 3]) / 2;
}

}  // namespace

std::vector<NormalArc> trace_arcs(const Triangulation& T, const Trace& tr) {
  std::vector<NormalArc> arcs;
  for (int c = 0; c < static_cast<int>(tr.components.size()); ++c) {
    const TracedComponent& comp = tr.components[c];
    long n = static_cast<long>(comp.slots.size());
    for (long j = 0; j < n; ++j) {
      SlotRef in = comp.slots[j];
      long next = (j + 1) % n;
      SlotRef out = T.opposite(comp.slots[next]);
      check(out.tri == in.tri, "walk step skips a triangle");

      NormalArc a;
      a.tri = in.tri;
      a.comp = c;
      a.idx = j;
      a.side_in = in.side;
      a.local_in = slot_local(T, tr, comp.points[j], in);
      a.side_out = out.side;
      a.local_out = slot_local(T, tr, comp.points[next], out);

      long wi = points_on_edge(tr, T.slot(in).edge);
      long ni = corner_count_of_trace(T, tr, in.tri, in.side);
      if (a.local_in < ni) {
        a.corner = in.side;
        a.depth = a.local_in;
        check(out.side == (in.side + 2) % 3, "arc exit side mismatch");
        long wo = points_on_edge(tr, T.slot(out).edge);
        check(a.local_out == wo - 1 - a.depth, "arc exit depth mismatch");
      } else {
        a.corner = (in.side + 1) % 3;
        a.depth = wi - 1 - a.local_in;
        check(out.side == (in.side + 1) % 3, "arc exit side mismatch");
        check(a.local_out == a.depth, "arc exit depth mismatch");
      }
      arcs.push_back(a);
    }
  }
  return arcs;
}

namespace {

// Boundary key of an arc endpoint: (side, position along the side's ccw
// traversal) in the combined red/blue order of the overlay's placement.
// Lexicographic order on keys is the ccw boundary order of the triangle.
struct BKey {
  int side = -1;
  Int pos;

  bool operator==(const BKey& o) const { return side == o.side && pos == o.pos; }
  bool operator!=(const BKey& o) const { return !(*this == o); }
  bool operator<(const BKey& o) const {
    if (side != o.side) return side < o.side;
    return pos < o.pos;
  }
  bool operator>(const BKey& o) const { return o < *this; }
};

// Strictly-between test on the ccw circle.
bool ccw_between(const BKey& a, const BKey& x, const BKey& b) {
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

struct EndpointKeyer {
  const Triangulation& T;
  const Trace& red;
  const Trace& blue;
  const std::vector<Int>* gaps;  // per red point; null means all zero

  Int gap(long red_point) const {
    return gaps && !gaps->empty() ? (*gaps)[red_point] : Int(0);
  }

  // Combined fwd position on the point's edge. A red point sits after its
  // gap's worth of blue points plus the reds before it; a blue point at fwd
  // position j is pushed back by every red whose gap is <= j.
  Int combined_fwd(bool is_red, long p) const {
    if (is_red) return Int(gap(p) + fwd_pos(red, p));
    int e = blue.edge_of_point(p);
    long j = fwd_pos(blue, p);
    long lo = red.edge_offset[e];
    long hi = lo + points_on_edge(red, e);
    long cnt = 0;
    for (long k = lo; k < hi; ++k)
      if (gap(k) <= j) ++cnt;
    return Int(j + cnt);
  }

  BKey key(bool is_red, long p, SlotRef r) const {
    int e = T.slot(r).edge;
    long total = points_on_edge(red, e) + points_on_edge(blue, e);
    Int c = combined_fwd(is_red, p);
    Int local = T.slot(r).fwd ? c : Int(total - 1 - c);
    return BKey{r.side, local};
  }

  BKey in_key(bool is_red, const NormalArc& a) const {
    const Trace& tr = is_red ? red : blue;
    const TracedComponent& c = tr.components[a.comp];
    return key(is_red, c.points[a.idx], SlotRef{a.tri, a.side_in});
  }
  BKey out_key(bool is_red, const NormalArc& a) const {
    const Trace& tr = is_red ? red : blue;
    const TracedComponent& c = tr.components[a.comp];
    long next = (a.idx + 1) % static_cast<long>(c.points.size());
    return key(is_red, c.points[next], SlotRef{a.tri, a.side_out});
  }
};

}  // namespace

Overlay::Overlay(const Triangulation& T, const Coords& red, const Coords& blue)
    : Overlay(T, red, blue, std::vector<Int>{}) {}

Overlay::Overlay(const Triangulation& T, const Coords& red, const Coords& blue,
                 std::vector<Int> red_gaps)
    : T_(T),
      red_trace_(trace_multicurve(T, red)),
      blue_trace_(trace_multicurve(T, blue)),
      red_gaps_(std::move(red_gaps)) {
  if (red_gaps_.empty()) red_gaps_.assign(red_trace_.total_points, Int(0));
  check(static_cast<long>(red_gaps_.size()) == red_trace_.total_points,
        "one gap per red point");
  for (int e = 0; e < T.num_edges(); ++e) {
    long lo = red_trace_.edge_offset[e];
    long hi = lo + points_on_edge(red_trace_, e);
    Int blues(points_on_edge(blue_trace_, e));
    for (long p = lo; p < hi; ++p) {
      check(red_gaps_[p] >= 0 && red_gaps_[p] <= blues, "gap out of range");
      check(p == lo || red_gaps_[p - 1] <= red_gaps_[p],
            "gaps must be nondecreasing along an edge");
    }
  }

  red_arcs_ = trace_arcs(T, red_trace_);
  blue_arcs_ = trace_arcs(T, blue_trace_);

  red_arc_offset_.assign(red_trace_.components.size() + 1, 0);
  for (std::size_t c = 0; c < red_trace_.components.size(); ++c)
    red_arc_offset_[c + 1] =
        red_arc_offset_[c] +
        static_cast<long>(red_trace_.components[c].slots.size());
  blue_arc_offset_.assign(blue_trace_.components.size() + 1, 0);
  for (std::size_t c = 0; c < blue_trace_.components.size(); ++c)
    blue_arc_offset_[c + 1] =
        blue_arc_offset_[c] +
        static_cast<long>(blue_trace_.components[c].slots.size());

  // Bucket arcs by triangle.
  std::vector<std::vector<long>> red_in(T.num_triangles()),
      blue_in(T.num_triangles());
  for (long i = 0; i < static_cast<long>(red_arcs_.size()); ++i)
    red_in[red_arcs_[i].tri].push_back(i);
  for (long i = 0; i < static_cast<long>(blue_arcs_.size()); ++i)
    blue_in[blue_arcs_[i].tri].push_back(i);

  EndpointKeyer keyer{T, red_trace_, blue_trace_, &red_gaps_};
  on_red_.assign(red_arcs_.size(), {});
  on_blue_.assign(blue_arcs_.size(), {});

  for (int t = 0; t < T.num_triangles(); ++t) {
    if (red_in[t].empty() || blue_in[t].empty()) continue;

    // Rank every endpoint key around the boundary for distance sorting.
    std::vector<BKey> all;
    for (long i : red_in[t]) {
      all.push_back(keyer.in_key(true, red_arcs_[i]));
      all.push_back(keyer.out_key(true, red_arcs_[i]));
    }
    for (long i : blue_in[t]) {
      all.push_back(keyer.in_key(false, blue_arcs_[i]));
      all.push_back(keyer.out_key(false, blue_arcs_[i]));
    }
    std::sort(all.begin(), all.end());
    check(std::adjacent_find(all.begin(), all.end()) == all.end(),
          "duplicate boundary key");
    auto rank = [&](const BKey& k) {
      return static_cast<long>(
          std::lower_bound(all.begin(), all.end(), k) - all.begin());
    };
    long n_keys = static_cast<long>(all.size());
    auto dist_from = [&](const BKey& from, const BKey& to) {
      long d = rank(to) - rank(from);
      return d >= 0 ? d : d + n_keys;
    };

    std::vector<long> found_here;
    for (long ri : red_in[t]) {
      BKey a1 = keyer.in_key(true, red_arcs_[ri]);
      BKey a2 = keyer.out_key(true, red_arcs_[ri]);
      struct Hit {
        long dist_left;
        long dist_right;
        long id;
      };
      std::vector<Hit> hits;
      for (long bi : blue_in[t]) {
        BKey b1 = keyer.in_key(false, blue_arcs_[bi]);
        BKey b2 = keyer.out_key(false, blue_arcs_[bi]);
        bool in1 = ccw_between(a1, b1, a2);
        bool in2 = ccw_between(a1, b2, a2);
        if (in1 == in2) continue;
        ArcCrossing x;
        x.red_arc = ri;
        x.blue_arc = bi;
        x.sign = in1 ? 1 : -1;
        const BKey& left = in1 ? b1 : b2;
        const BKey& right = in1 ? b2 : b1;
        long id = static_cast<long>(crossings_.size());
        crossings_.push_back(x);
        found_here.push_back(id);
        hits.push_back(Hit{dist_from(a1, left), dist_from(a2, right), id});
      }
      std::sort(hits.begin(), hits.end(), [](const Hit& p, const Hit& q) {
        return p.dist_left < q.dist_left;
      });
      // Disjoint blue chords must order consistently from both endpoints.
      for (std::size_t k = 1; k < hits.size(); ++k)
        check(hits[k - 1].dist_right > hits[k].dist_right,
              "inconsistent chord order along arc");
      for (const Hit& h : hits) on_red_[ri].push_back(h.id);
    }

    // Order the same crossings along each blue arc. The red endpoint inside
    // the ccw interval (b1 -> b2) leads: for a positive crossing that is the
    // red exit, for a negative one the red entry.
    std::vector<std::vector<long>> per_blue;
    std::map<long, std::size_t> blue_slot;
    for (long id : found_here) {
      long bi = crossings_[id].blue_arc;
      if (!blue_slot.count(bi)) {
        blue_slot[bi] = per_blue.size();
        per_blue.push_back({});
      }
      per_blue[blue_slot[bi]].push_back(id);
    }
    for (const auto& [bi, slot] : blue_slot) {
      BKey b1 = keyer.in_key(false, blue_arcs_[bi]);
      BKey b2 = keyer.out_key(false, blue_arcs_[bi]);
      struct Hit {
        long dist_left;
        long dist_right;
        long id;
      };
      std::vector<Hit> hits;
      for (long id : per_blue[slot]) {
        const ArcCrossing& x = crossings_[id];
        BKey a1 = keyer.in_key(true, red_arcs_[x.red_arc]);
        BKey a2 = keyer.out_key(true, red_arcs_[x.red_arc]);
        const BKey& inside = x.sign > 0 ? a2 : a1;
        const BKey& other = x.sign > 0 ? a1 : a2;
        hits.push_back(Hit{dist_from(b1, inside), dist_from(b2, other), id});
      }
      std::sort(hits.begin(), hits.end(), [](const Hit& p, const Hit& q) {
        return p.dist_left < q.dist_left;
      });
      for (std::size_t k = 1; k < hits.size(); ++k)
        check(hits[k - 1].dist_right > hits[k].dist_right,
              "inconsistent chord order along arc");
      for (const Hit& h : hits) on_blue_[bi].push_back(h.id);
    }
  }
}

long Overlay::signed_sum() const {
  long s = 0;
  for (const ArcCrossing& x : crossings_) s += x.sign;
  return s;
}

long Overlay::red_arc_id(int comp, long idx) const {
  return red_arc_offset_[comp] + idx;
}

long Overlay::blue_arc_id(int comp, long idx) const {
  return blue_arc_offset_[comp] + idx;
}

namespace {

// One endpoint of a red arc in gap coordinates. The gap g of a red point is
// the number of blue points that precede it along its edge's fwd direction;
// the cost formula wants the endpoint's insertion depth among the blues
// counted from the arc's corner, an affine image of g.
struct EndMap {
  int var = -1;   // red point variable
  bool flip_slot; // slot runs against edge fwd
  bool flip_end;  // corner sits at the slot's far end
  Int blues;      // blue points on the edge

  Int depth(const Int& g) const {
    Int gs = flip_slot ? Int(blues - g) : g;
    return flip_end ? Int(blues - gs) : gs;
  }
  // g value hitting a given corner depth, clipped to [0, blues].
  Int gap_for_depth(const Int& d) const {
    Int gs = flip_end ? Int(blues - d) : d;
    Int g = flip_slot ? Int(blues - gs) : gs;
    if (g < 0) g = 0;
    if (g > blues) g = blues;
    return g;
  }
};

struct MovingArc {
  EndMap in, out;
  Int corner_blues;  // blue corner count at the arc's corner

  Int cost(const Int& g_in, const Int& g_out) const {
    Int p = in.depth(g_in);
    Int q = out.depth(g_out);
    const Int& m = corner_blues;
    Int pm = p < m ? p : m;
    Int qm = q < m ? q : m;
    Int c = pm > qm ? Int(pm - qm) : Int(qm - pm);
    if (p > m) c += p - m;
    if (q > m) c += q - m;
    return c;
  }
};

}  // namespace

MinPlacement min_crossings_placement(const Triangulation& T, const Coords& red,
                                     const Coords& blue, int max_red_points) {
  T.check_coords_shape(red);
  T.check_coords_shape(blue);
  Trace rtr = trace_multicurve(T, red);
  if (rtr.total_points == 0) return MinPlacement{Int(0), {}};
  bool blue_zero = true;
  for (const Int& w : blue)
    if (w != 0) blue_zero = false;
  if (blue_zero)
    return MinPlacement{Int(0), std::vector<Int>(rtr.total_points, Int(0))};
  validate_multicurve(T, blue);
  if (rtr.total_points > max_red_points)
    throw Error(ErrorKind::Unsupported,
                "minimal position solver wants the lighter curve first");

  std::vector<NormalArc> arcs = trace_arcs(T, rtr);

  // One variable per red point, grouped by edge in fwd order; gaps along one
  // edge must be nondecreasing or the red arcs would have to cross each other.
  int nv = static_cast<int>(rtr.total_points);
  auto var_of_point = [&](long p) { return static_cast<int>(p); };
  std::vector<int> var_edge(nv);
  for (int v = 0; v < nv; ++v) var_edge[v] = rtr.edge_of_point(v);

  auto end_map = [&](const NormalArc& a, bool at_in) {
    SlotRef r{a.tri, at_in ? a.side_in : a.side_out};
    const TracedComponent& c = rtr.components[a.comp];
    long next = (a.idx + 1) % static_cast<long>(c.points.size());
    long p = c.points[at_in ? a.idx : next];
    EndMap m;
    m.var = var_of_point(p);
    m.flip_slot = !T.slot(r).fwd;
    // Corner sits at the slot start exactly when the side index equals the
    // corner index (side i runs corner i -> corner i+1).
    m.flip_end = (r.side != a.corner);
    m.blues = blue[T.slot(r).edge];
    return m;
  };

  std::vector<MovingArc> marcs;
  for (const NormalArc& a : arcs) {
    MovingArc m;
    m.in = end_map(a, true);
    m.out = end_map(a, false);
    m.corner_blues = corner_count(T, blue, a.tri, a.corner);
    marcs.push_back(m);
  }

  // Candidate gap values per variable: every kink of the piecewise-linear
  // cost lies on axis lines (depth 0, the corner count, all blues) or on
  // alignment lines tying an arc's two endpoint depths; closing the sets
  // under alignment transfer covers every vertex of the arrangement that is
  // anchored to an axis through tie chains, and some minimizing vertex is.
  std::vector<std::set<Int>> cand(nv);
  for (int v = 0; v < nv; ++v) {
    cand[v].insert(Int(0));
    cand[v].insert(blue[var_edge[v]]);
  }
  for (const MovingArc& m : marcs) {
    for (const EndMap* e : {&m.in, &m.out}) {
      cand[e->var].insert(e->gap_for_depth(Int(0)));
      cand[e->var].insert(e->gap_for_depth(m.corner_blues));
      cand[e->var].insert(e->gap_for_depth(e->blues));
    }
  }
  for (int round = 0; round < nv; ++round) {
    bool grew = false;
    for (const MovingArc& m : marcs) {
      const EndMap& a = m.in;
      const EndMap& b = m.out;
      for (const Int& g : std::set<Int>(cand[a.var]))
        grew |= cand[b.var].insert(b.gap_for_depth(a.depth(g))).second;
      for (const Int& g : std::set<Int>(cand[b.var]))
        grew |= cand[a.var].insert(a.gap_for_depth(b.depth(g))).second;
    }
    // Same-edge neighbours can also be tied by an equal-gap wall.
    for (int v = 0; v + 1 < nv; ++v) {
      if (var_edge[v] != var_edge[v + 1]) continue;
      for (const Int& g : std::set<Int>(cand[v]))
        grew |= cand[v + 1].insert(g).second;
      for (const Int& g : std::set<Int>(cand[v + 1]))
        grew |= cand[v].insert(g).second;
    }
    if (!grew) break;
  }

  std::vector<std::vector<Int>> cands(nv);
  for (int v = 0; v < nv; ++v)
    cands[v].assign(cand[v].begin(), cand[v].end());

  // Arcs fully assigned once variable v is set, for incremental cost.
  std::vector<std::vector<int>> ready_at(nv);
  for (int i = 0; i < static_cast<int>(marcs.size()); ++i) {
    int last = std::max(marcs[i].in.var, marcs[i].out.var);
    ready_at[last].push_back(i);
  }

  std::vector<Int> g(nv);
  std::vector<Int> best_g;
  Int best(-1);
  auto dfs = [&](auto&& self, int v, const Int& acc) -> void {
    if (v == nv) {
      if (best < 0 || acc < best) {
        best = acc;
        best_g = g;
      }
      return;
    }
    for (const Int& c : cands[v]) {
      // Monotone along each edge: self-order of the red points is fixed.
      if (v > 0 && var_edge[v - 1] == var_edge[v] && c < g[v - 1]) continue;
      g[v] = c;
      Int acc2 = acc;
      for (int ai : ready_at[v])
        acc2 += marcs[ai].cost(g[marcs[ai].in.var], g[marcs[ai].out.var]);
      if (best >= 0 && acc2 >= best) continue;
      self(self, v + 1, acc2);
    }
  };
  dfs(dfs, 0, Int(0));
  check(best >= 0, "empty placement search");
  return MinPlacement{best, std::move(best_g)};
}

Int min_crossings_small_red(const Triangulation& T, const Coords& red,
                            const Coords& blue, int max_red_points) {
  return min_crossings_placement(T, red, blue, max_red_points).count;
}

namespace {

// Union-find over local faces.
struct Forest {
  std::vector<int> parent;
  explicit Forest(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

// The union of the two curves cuts every triangle into local faces. Faces
// are orbits of "turn clockwise at the head" over directed segments; gluing
// triangles merges faces across edges, and the merged classes are the
// complementary regions. The frontier circles are traced along the chords
// alone: at a crossing the circle turns within the triangle, at a boundary
// point it continues on the far side's arc through the same point.
std::vector<RegionReport> analyze_complement(const Overlay& ov) {
  const Triangulation& T = ov.triangulation();
  const Trace& rtr = ov.red_trace();
  const Trace& btr = ov.blue_trace();
  const std::vector<NormalArc>& rarcs = ov.red_arcs();
  const std::vector<NormalArc>& barcs = ov.blue_arcs();
  const std::vector<ArcCrossing>& xs = ov.crossings();
  const std::vector<std::vector<long>>& on_red = ov.crossings_on_red();
  const std::vector<std::vector<long>>& on_blue = ov.crossings_on_blue();
  check(rtr.total_points + btr.total_points > 0, "complement of empty union");

  const int ntri = T.num_triangles();
  EndpointKeyer keyer{T, rtr, btr, &ov.red_gaps()};

  // Combined point counts and prefix offsets per triangle side.
  auto pts_count = [&](int t, int s) {
    int e = T.triangle(t).side[s].edge;
    return points_on_edge(rtr, e) + points_on_edge(btr, e);
  };
  std::vector<std::array<long, 3>> pt_off(ntri), bseg_off(ntri);
  long total_apps = 0, total_bsegs = 0;
  for (int t = 0; t < ntri; ++t)
    for (int s = 0; s < 3; ++s) {
      pt_off[t][s] = total_apps;
      bseg_off[t][s] = total_bsegs;
      total_apps += pts_count(t, s);
      total_bsegs += pts_count(t, s) + 1;
    }

  // Chord segment offsets: each arc is cut by its crossings.
  std::vector<long> rseg_off(rarcs.size() + 1, 0), blseg_off(barcs.size() + 1, 0);
  for (std::size_t a = 0; a < rarcs.size(); ++a)
    rseg_off[a + 1] = rseg_off[a] + static_cast<long>(on_red[a].size()) + 1;
  for (std::size_t a = 0; a < barcs.size(); ++a)
    blseg_off[a + 1] = blseg_off[a] + static_cast<long>(on_blue[a].size()) + 1;
  const long rseg_base = total_bsegs;
  const long blseg_base = total_bsegs + rseg_off[rarcs.size()];
  const long total_segs = blseg_base + blseg_off[barcs.size()];

  auto bseg = [&](int t, int s, long k) { return bseg_off[t][s] + k; };
  auto rseg = [&](long a, long j) { return rseg_base + rseg_off[a] + j; };
  auto blseg = [&](long a, long j) { return blseg_base + blseg_off[a] + j; };
  auto half = [](long seg, int d) { return 2 * seg + d; };

  // Vertices: triangle corners, point appearances (one per side), crossings.
  const long VP = 3L * ntri;
  const long VX = VP + total_apps;
  const long total_vertices = VX + static_cast<long>(xs.size());
  auto corner_v = [&](int t, int c) { return 3L * t + c; };
  auto point_v = [&](int t, int s, long pos) { return VP + pt_off[t][s] + pos; };

  // Which arc-end sits at each point appearance: (is_red, arc, at_in_end).
  struct ArcEnd {
    bool red = false;
    long arc = -1;
    bool at_in = false;
  };
  std::vector<ArcEnd> end_at(total_apps);
  std::vector<char> end_set(total_apps, 0);
  auto set_end = [&](int t, int s, long pos, ArcEnd e) {
    long i = pt_off[t][s] + pos;
    check(!end_set[i], "two arc ends at one appearance");
    end_set[i] = 1;
    end_at[i] = e;
  };
  auto local_of_key = [&](const BKey& k) { return to_long(k.pos); };
  for (std::size_t a = 0; a < rarcs.size(); ++a) {
    const NormalArc& n = rarcs[a];
    set_end(n.tri, n.side_in, local_of_key(keyer.in_key(true, n)),
            ArcEnd{true, static_cast<long>(a), true});
    set_end(n.tri, n.side_out, local_of_key(keyer.out_key(true, n)),
            ArcEnd{true, static_cast<long>(a), false});
  }
  for (std::size_t a = 0; a < barcs.size(); ++a) {
    const NormalArc& n = barcs[a];
    set_end(n.tri, n.side_in, local_of_key(keyer.in_key(false, n)),
            ArcEnd{false, static_cast<long>(a), true});
    set_end(n.tri, n.side_out, local_of_key(keyer.out_key(false, n)),
            ArcEnd{false, static_cast<long>(a), false});
  }
  for (long i = 0; i < total_apps; ++i) check(end_set[i], "appearance without arc end");

  // Where each crossing sits along its two arcs.
  std::vector<long> pos_in_red(xs.size()), pos_in_blue(xs.size());
  for (std::size_t a = 0; a < on_red.size(); ++a)
    for (std::size_t i = 0; i < on_red[a].size(); ++i)
      pos_in_red[on_red[a][i]] = static_cast<long>(i);
  for (std::size_t a = 0; a < on_blue.size(); ++a)
    for (std::size_t j = 0; j < on_blue[a].size(); ++j)
      pos_in_blue[on_blue[a][j]] = static_cast<long>(j);

  // head/tail of the even (forward) half of every segment; odd halves swap.
  std::vector<long> seg_tail(total_segs, -1), seg_head(total_segs, -1);
  std::vector<int> seg_tri(total_segs, -1);
  auto head_of = [&](long h) { return (h & 1) ? seg_tail[h / 2] : seg_head[h / 2]; };

  for (int t = 0; t < ntri; ++t)
    for (int s = 0; s < 3; ++s) {
      long P = pts_count(t, s);
      for (long k = 0; k <= P; ++k) {
        long sg = bseg(t, s, k);
        seg_tri[sg] = t;
        seg_tail[sg] = k == 0 ? corner_v(t, s) : point_v(t, s, k - 1);
        seg_head[sg] = k == P ? corner_v(t, (s + 1) % 3) : point_v(t, s, k);
      }
    }
  auto chord_chain = [&](bool red, long a) {
    const NormalArc& n = red ? rarcs[a] : barcs[a];
    const std::vector<long>& on = red ? on_red[a] : on_blue[a];
    std::vector<long> chain;
    chain.push_back(point_v(n.tri, n.side_in,
                            local_of_key(keyer.in_key(red, n))));
    for (long x : on) chain.push_back(VX + x);
    chain.push_back(point_v(n.tri, n.side_out,
                            local_of_key(keyer.out_key(red, n))));
    return chain;
  };
  for (std::size_t a = 0; a < rarcs.size(); ++a) {
    std::vector<long> chain = chord_chain(true, a);
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      long sg = rseg(a, j);
      seg_tri[sg] = rarcs[a].tri;
      seg_tail[sg] = chain[j];
      seg_head[sg] = chain[j + 1];
    }
  }
  for (std::size_t a = 0; a < barcs.size(); ++a) {
    std::vector<long> chain = chord_chain(false, a);
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
      long sg = blseg(a, j);
      seg_tri[sg] = barcs[a].tri;
      seg_tail[sg] = chain[j];
      seg_head[sg] = chain[j + 1];
    }
  }

  // Outgoing half-edges in ccw order around each vertex.
  std::vector<std::vector<long>> sigma(total_vertices);
  auto away_half = [&](const ArcEnd& e) {
    const std::vector<long>& on = e.red ? on_red[e.arc] : on_blue[e.arc];
    long last = static_cast<long>(on.size());
    long sg = e.at_in ? (e.red ? rseg(e.arc, 0) : blseg(e.arc, 0))
                      : (e.red ? rseg(e.arc, last) : blseg(e.arc, last));
    return half(sg, e.at_in ? 0 : 1);
  };
  for (int t = 0; t < ntri; ++t) {
    for (int c = 0; c < 3; ++c) {
      int prev = (c + 2) % 3;
      sigma[corner_v(t, c)] = {half(bseg(t, c, 0), 0),
                               half(bseg(t, prev, pts_count(t, prev)), 1)};
    }
    for (int s = 0; s < 3; ++s) {
      long P = pts_count(t, s);
      for (long pos = 0; pos < P; ++pos) {
        const ArcEnd& e = end_at[pt_off[t][s] + pos];
        sigma[point_v(t, s, pos)] = {half(bseg(t, s, pos + 1), 0),
                                     away_half(e),
                                     half(bseg(t, s, pos), 1)};
      }
    }
  }
  for (std::size_t x = 0; x < xs.size(); ++x) {
    long a = xs[x].red_arc, b = xs[x].blue_arc;
    long i = pos_in_red[x], j = pos_in_blue[x];
    long am = half(rseg(a, i), 1), ap = half(rseg(a, i + 1), 0);
    long bm = half(blseg(b, j), 1), bp = half(blseg(b, j + 1), 0);
    // Rays in ccw order match the ccw boundary order of the four endpoints.
    sigma[VX + x] = xs[x].sign > 0 ? std::vector<long>{am, bm, ap, bp}
                                   : std::vector<long>{am, bp, ap, bm};
  }

  auto tail_of = [&](long h) { return (h & 1) ? seg_head[h / 2] : seg_tail[h / 2]; };
  std::vector<int> sigma_index(2 * total_segs, -1);
  for (long v = 0; v < total_vertices; ++v)
    for (std::size_t i = 0; i < sigma[v].size(); ++i) {
      check(tail_of(sigma[v][i]) == v, "sigma lists outgoing halves");
      sigma_index[sigma[v][i]] = static_cast<int>(i);
    }
  for (long h = 0; h < 2 * total_segs; ++h)
    check(sigma_index[h] >= 0, "half missing from rotation system");

  // One clockwise step past the reversed half: the face on the left.
  auto next_half = [&](long h) {
    long v = head_of(h);
    const std::vector<long>& ring = sigma[v];
    int i = sigma_index[h ^ 1];
    int n = static_cast<int>(ring.size());
    return ring[(i + n - 1) % n];
  };

  std::vector<long> face_of(2 * total_segs, -1);
  std::vector<char> face_outer;
  long n_faces = 0;
  for (long h0 = 0; h0 < 2 * total_segs; ++h0) {
    if (face_of[h0] >= 0) continue;
    long f = n_faces++;
    bool any_outer = false, all_outer = true;
    long h = h0;
    do {
      face_of[h] = f;
      bool outer_half = (h / 2) < total_bsegs && (h & 1);
      any_outer |= outer_half;
      all_outer &= outer_half;
      h = next_half(h);
    } while (h != h0);
    check(any_outer == all_outer, "mixed outer face");
    face_outer.push_back(any_outer);
  }

  // Each triangle is a disk: V - E + F must come to 2.
  {
    std::vector<long> vcnt(ntri, 3), ecnt(ntri, 0), fcnt(ntri, 0);
    for (int t = 0; t < ntri; ++t)
      for (int s = 0; s < 3; ++s) {
        vcnt[t] += pts_count(t, s);
        ecnt[t] += pts_count(t, s) + 1;
      }
    for (const ArcCrossing& x : xs) vcnt[rarcs[x.red_arc].tri] += 1;
    for (std::size_t a = 0; a < rarcs.size(); ++a)
      ecnt[rarcs[a].tri] += static_cast<long>(on_red[a].size()) + 1;
    for (std::size_t a = 0; a < barcs.size(); ++a)
      ecnt[barcs[a].tri] += static_cast<long>(on_blue[a].size()) + 1;
    std::vector<char> seen(n_faces, 0);
    for (long h = 0; h < 2 * total_segs; ++h) {
      long f = face_of[h];
      if (!seen[f]) {
        seen[f] = 1;
        fcnt[seg_tri[h / 2]] += 1;
      }
    }
    for (int t = 0; t < ntri; ++t)
      check(vcnt[t] - ecnt[t] + fcnt[t] == 2, "triangle cell count is off");
  }

  // Glue triangles: segment k on one slot faces segment P-k on the other.
  Forest uf(static_cast<int>(n_faces));
  for (int e = 0; e < T.num_edges(); ++e) {
    SlotRef s0 = T.slots_of(e)[0], s1 = T.slots_of(e)[1];
    long P = pts_count(s0.tri, s0.side);
    check(P == pts_count(s1.tri, s1.side), "glued sides disagree on points");
    for (long k = 0; k <= P; ++k) {
      long f0 = face_of[half(bseg(s0.tri, s0.side, k), 0)];
      long f1 = face_of[half(bseg(s1.tri, s1.side, P - k), 0)];
      check(!face_outer[f0] && !face_outer[f1], "outer face glued");
      uf.unite(static_cast<int>(f0), static_cast<int>(f1));
    }
  }

  // Number the regions in first-appearance order over face ids.
  std::vector<int> region_of_face(n_faces, -1);
  int n_regions = 0;
  for (long f = 0; f < n_faces; ++f) {
    if (face_outer[f]) continue;
    int r = uf.find(static_cast<int>(f));
    if (region_of_face[r] < 0) region_of_face[r] = n_regions++;
  }
  auto region_of = [&](long f) {
    check(!face_outer[f], "outer face has no region");
    return region_of_face[uf.find(static_cast<int>(f))];
  };

  std::vector<RegionReport> out(n_regions);

  std::vector<long> glue_pairs(n_regions, 0);
  for (int e = 0; e < T.num_edges(); ++e) {
    SlotRef s0 = T.slots_of(e)[0];
    long P = pts_count(s0.tri, s0.side);
    for (long k = 0; k <= P; ++k)
      glue_pairs[region_of(face_of[half(bseg(s0.tri, s0.side, k), 0)])] += 1;
  }
  for (long f = 0; f < n_faces; ++f)
    if (!face_outer[f]) out[region_of(f)].local_faces += 1;

  // A puncture lies in the region at any of its corner wedges; the wedges of
  // one vertex class all glue around it, so the region must agree.
  std::vector<int> region_of_vertex(T.num_vertices(), -1);
  for (int t = 0; t < ntri; ++t)
    for (int c = 0; c < 3; ++c) {
      int v = T.vertex_of_corner(t, c);
      int r = region_of(face_of[half(bseg(t, c, 0), 0)]);
      check(region_of_vertex[v] < 0 || region_of_vertex[v] == r,
            "puncture wedges in different regions");
      region_of_vertex[v] = r;
    }
  for (int v = 0; v < T.num_vertices(); ++v) {
    check(region_of_vertex[v] >= 0, "puncture in no region");
    out[region_of_vertex[v]].punctures += 1;
    out[region_of_vertex[v]].puncture_ids.push_back(v);
  }

  // Frontier circles, one per orbit of chord halves.
  std::vector<char> circle_done(2 * total_segs, 0);
  auto appearance_of_vertex = [&](long v) {
    long i = v - VP;
    for (int t = 0; t < ntri; ++t)
      for (int s = 0; s < 3; ++s) {
        long P = pts_count(t, s);
        if (i >= pt_off[t][s] && i < pt_off[t][s] + P)
          return std::tuple<int, int, long>{t, s, i - pt_off[t][s]};
      }
    check(false, "vertex is not a point appearance");
    return std::tuple<int, int, long>{-1, -1, -1};
  };
  for (long seg = total_bsegs; seg < total_segs; ++seg) {
    for (int d = 0; d < 2; ++d) {
      long h0 = half(seg, d);
      if (circle_done[h0]) continue;
      Walk w;
      int reg = region_of(face_of[h0]);
      long h = h0;
      do {
        check(!circle_done[h], "circle rejoins mid-trace");
        circle_done[h] = 1;
        check(region_of(face_of[h]) == reg, "circle crosses regions");
        long v = head_of(h);
        if (v >= VX) {
          h = next_half(h);
        } else {
          auto [t, s, pos] = appearance_of_vertex(v);
          SlotRef o = T.opposite(SlotRef{t, s});
          long P2 = pts_count(o.tri, o.side);
          const ArcEnd& cont = end_at[pt_off[o.tri][o.side] + (P2 - 1 - pos)];
          w.steps.push_back(o);
          h = away_half(cont);
        }
      } while (h != h0);
      out[reg].circles += 1;
      out[reg].circle_walks.push_back(std::move(w));
    }
  }

  for (RegionReport& r : out) {
    check(r.circles > 0, "region without frontier");
    long twice_genus =
        2 - r.circles - r.punctures +
        (glue_pairs[&r - out.data()] - r.local_faces);
    check(twice_genus >= 0 && twice_genus % 2 == 0, "region count mismatch");
    r.genus = static_cast<int>(twice_genus / 2);
  }
  return out;
}

}  // namespace ccx
