#include "ccx/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ccx {

Surface Surface::parse(const std::string& text) {
  // Accepts "g,b" and "S_{g,b}".
  std::string body = text;
  if (body.rfind("S_{", 0) == 0 && body.back() == '}') body = body.substr(3, body.size() - 4);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::BadInput, "surface must be g,b");
  try {
    int g = std::stoi(body.substr(0, comma));
    int b = std::stoi(body.substr(comma + 1));
    if (g < 0 || b < 0) throw Error(ErrorKind::BadInput, "negative surface data");
    return Surface{g, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::BadInput, "cannot parse surface '" + text + "'");
  }
}

Triangulation::Triangulation(Surface s, std::vector<Triangle> tris)
    : surface_(s), tris_(std::move(tris)) {
  build_tables();
}

void Triangulation::build_tables() {
  require_curve_system(surface_);
  if (tris_.empty()) throw Error(ErrorKind::BadInput, "no triangles");

  int max_edge = -1;
  for (const Triangle& t : tris_)
    for (const Slot& sl : t.side) max_edge = std::max(max_edge, sl.edge);
  num_edges_ = max_edge + 1;

  // Exactly one fwd and one bwd slot per edge.
  edge_slots_.assign(num_edges_, {SlotRef{}, SlotRef{}});
  std::vector<int> seen_fwd(num_edges_, 0), seen_bwd(num_edges_, 0);
  for (int t = 0; t < num_triangles(); ++t)
    for (int i = 0; i < 3; ++i) {
      const Slot& sl = tris_[t].side[i];
      if (sl.edge < 0) throw Error(ErrorKind::BadInput, "unset edge slot");
      (sl.fwd ? seen_fwd : seen_bwd)[sl.edge]++;
      edge_slots_[sl.edge][sl.fwd ? 0 : 1] = SlotRef{t, i};
    }
  for (int e = 0; e < num_edges_; ++e)
    if (seen_fwd[e] != 1 || seen_bwd[e] != 1)
      throw Error(ErrorKind::BadInput,
                  "edge " + std::to_string(e) + " must appear once in each direction");

  // Connectivity of the dual graph.
  std::vector<char> reached(num_triangles(), 0);
  std::queue<int> q;
  q.push(0);
  reached[0] = 1;
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    for (int i = 0; i < 3; ++i) {
      SlotRef o = opposite(SlotRef{t, i});
      if (!reached[o.tri]) {
        reached[o.tri] = 1;
        q.push(o.tri);
      }
    }
  }
  if (!std::all_of(reached.begin(), reached.end(), [](char c) { return c; }))
    throw Error(ErrorKind::Disconnected, "triangulation is not connected");

  // F - E must match the punctured Euler characteristic.
  int chi = 2 - 2 * surface_.genus - surface_.punctures;
  if (num_triangles() - num_edges_ != chi)
    throw Error(ErrorKind::BadInput, "triangle/edge count does not fit " + surface_.name());

  // Ideal vertex classes: walk corners around each vertex. From corner i,
  // crossing side i lands at corner j+1 of the slot on the far side.
  corner_vertex_.assign(3 * num_triangles(), -1);
  num_vertices_ = 0;
  for (int t = 0; t < num_triangles(); ++t)
    for (int i = 0; i < 3; ++i) {
      if (corner_vertex_[3 * t + i] >= 0) continue;
      int v = num_vertices_++;
      int ct = t, ci = i;
      while (corner_vertex_[3 * ct + ci] < 0) {
        corner_vertex_[3 * ct + ci] = v;
        SlotRef o = opposite(SlotRef{ct, ci});
        ct = o.tri;
        ci = (o.side + 1) % 3;
      }
    }
  if (num_vertices_ != surface_.punctures)
    throw Error(ErrorKind::BadInput,
                "vertex classes (" + std::to_string(num_vertices_) + ") != punctures (" +
                    std::to_string(surface_.punctures) + ") for " + surface_.name());
}

SlotRef Triangulation::opposite(SlotRef r) const {
  const auto& both = edge_slots_[slot(r).edge];
  return both[0] == r ? both[1] : both[0];
}

Coords Triangulation::vertex_link(int v) const {
  Coords link(num_edges_, 0);
  for (int e = 0; e < num_edges_; ++e) {
    // Read both endpoint vertices off the fwd slot: side i runs corner i -> i+1.
    SlotRef f = edge_slots_[e][0];
    int start = corner_vertex_[3 * f.tri + f.side];
    int end = corner_vertex_[3 * f.tri + (f.side + 1) % 3];
    link[e] = Int((start == v) + (end == v));
  }
  return link;
}

bool Triangulation::flippable(int edge) const {
  return edge_slots_[edge][0].tri != edge_slots_[edge][1].tri;
}

namespace {
struct Square {
  // ccw around the square whose diagonal is the flipped edge:
  // a1, a2 from the fwd-slot triangle, b1, b2 from the bwd-slot triangle.
  Slot a1, a2, b1, b2;
  SlotRef t1, t2;  // slots of the diagonal
};
}  // namespace

static Square square_of(const Triangulation& T, int edge) {
  if (!T.flippable(edge))
    throw Error(ErrorKind::BadInput, "edge " + std::to_string(edge) + " is not flippable");
  SlotRef r1 = T.slots_of(edge)[0], r2 = T.slots_of(edge)[1];
  const Triangle& t1 = T.triangle(r1.tri);
  const Triangle& t2 = T.triangle(r2.tri);
  return Square{t1.side[(r1.side + 1) % 3], t1.side[(r1.side + 2) % 3],
                t2.side[(r2.side + 1) % 3], t2.side[(r2.side + 2) % 3], r1, r2};
}

Triangulation Triangulation::flipped(int edge) const {
  Square sq = square_of(*this, edge);
  std::vector<Triangle> tris = tris_;
  // New diagonal reuses the edge index. Each new triangle keeps the slot data
  // of the sides it inherits, so gluing to the rest of the surface is untouched.
  tris[sq.t1.tri] = Triangle{{Slot{edge, false}, sq.a2, sq.b1}};
  tris[sq.t2.tri] = Triangle{{Slot{edge, true}, sq.b2, sq.a1}};
  Triangulation F(surface_, std::move(tris));

  // Keep puncture identity stable: renumber F's vertex classes by the classes
  // they came from. The square's corners are, in ccw order around it,
  // Q (start of a1), R (start of a2), P (start of b1), S (start of b2);
  // the rebuilt triangles have corners (S, R, P) and (R, S, Q).
  int P = vertex_of_corner(sq.t1.tri, sq.t1.side);
  int Q = vertex_of_corner(sq.t1.tri, (sq.t1.side + 1) % 3);
  int R = vertex_of_corner(sq.t1.tri, (sq.t1.side + 2) % 3);
  int S = vertex_of_corner(sq.t2.tri, (sq.t2.side + 2) % 3);
  std::vector<int> new_to_old(num_vertices_, -1);
  auto learn = [&](int tri, int corner, int old_v) {
    int nv = F.corner_vertex_[3 * tri + corner];
    if (new_to_old[nv] >= 0 && new_to_old[nv] != old_v)
      throw Error(ErrorKind::BadInput, "vertex tracking lost across a flip");
    new_to_old[nv] = old_v;
  };
  for (int t = 0; t < num_triangles(); ++t) {
    if (t == sq.t1.tri || t == sq.t2.tri) continue;
    for (int i = 0; i < 3; ++i) learn(t, i, corner_vertex_[3 * t + i]);
  }
  int sqv1[3] = {S, R, P}, sqv2[3] = {R, S, Q};
  for (int i = 0; i < 3; ++i) {
    learn(sq.t1.tri, i, sqv1[i]);
    learn(sq.t2.tri, i, sqv2[i]);
  }
  for (int& c : F.corner_vertex_) c = new_to_old[c];
  return F;
}

Coords Triangulation::flip_coords(int edge, const Coords& w) const {
  check_coords_shape(w);
  Square sq = square_of(*this, edge);
  Coords out = w;
  out[edge] = std::max(w[sq.a1.edge] + w[sq.b1.edge], w[sq.a2.edge] + w[sq.b2.edge]) - w[edge];
  return out;
}

Triangulation Triangulation::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != num_edges_)
    throw Error(ErrorKind::BadInput, "relabel permutation has wrong size");
  std::vector<int> seen(num_edges_, 0);
  for (int v : perm) {
    if (v < 0 || v >= num_edges_ || seen[v]++)
      throw Error(ErrorKind::BadInput, "relabel map is not a permutation");
  }
  std::vector<Triangle> tris = tris_;
  for (Triangle& t : tris)
    for (Slot& sl : t.side) sl.edge = perm[sl.edge];
  return Triangulation(surface_, std::move(tris));
}

Coords Triangulation::relabel_coords(const std::vector<int>& perm, const Coords& w) {
  Coords out(w.size());
  for (size_t e = 0; e < w.size(); ++e) out[perm[e]] = w[e];
  return out;
}

std::string Triangulation::canonical_key() const {
  // Gluing structure is determined by the edge labels alone (each edge has
  // exactly two appearances), so the key is the sorted list of triangles,
  // each rotated to its lexicographically least form.
  std::vector<std::array<int, 3>> rows;
  rows.reserve(tris_.size());
  for (const Triangle& t : tris_) {
    std::array<int, 3> best{-1, -1, -1};
    for (int r = 0; r < 3; ++r) {
      std::array<int, 3> cand{t.side[r].edge, t.side[(r + 1) % 3].edge, t.side[(r + 2) % 3].edge};
      if (best[0] < 0 || cand < best) best = cand;
    }
    rows.push_back(best);
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) {
    for (int e : r) key += std::to_string(e) + ",";
    key += ";";
  }
  return key;
}

bool Triangulation::same_labeled(const Triangulation& other) const {
  return surface_ == other.surface_ && canonical_key() == other.canonical_key();
}

void Triangulation::check_coords_shape(const Coords& w) const {
  if (static_cast<int>(w.size()) != num_edges_)
    throw Error(ErrorKind::IncompatibleTriangulation,
                "coordinate vector has " + std::to_string(w.size()) + " entries, expected " +
                    std::to_string(num_edges_));
  for (const Int& x : w)
    if (x < 0) throw Error(ErrorKind::BadInput, "negative edge weight");
}

// ---- reference layouts ----

namespace {

// Doubled ideal n-gon, both copies fanned from puncture 1.
// Edges: sides s_1..s_n at 0..n-1 (s_i joins p_i to p_{i+1}),
// front diagonals f_3..f_{n-1} at n..2n-4, back diagonals b_3..b_{n-1} after.
Triangulation planar_reference(int n) {
  auto s = [&](int i) { return i - 1; };            // 1-based
  auto f = [&](int j) { return n + (j - 3); };      // 3..n-1
  auto b = [&](int j) { return 2 * n - 3 + (j - 3); };
  std::vector<Triangle> tris;
  for (int k = 2; k <= n - 1; ++k) {  // front fan triangle on p_1, p_k, p_{k+1}
    Slot first = (k == 2) ? Slot{s(1), true} : Slot{f(k), true};
    Slot last = (k == n - 1) ? Slot{s(n), true} : Slot{f(k + 1), false};
    tris.push_back(Triangle{{first, Slot{s(k), true}, last}});
  }
  for (int k = 2; k <= n - 1; ++k) {  // back fan triangle, mirrored
    Slot first = (k == n - 1) ? Slot{s(n), false} : Slot{b(k + 1), true};
    Slot last = (k == 2) ? Slot{s(1), false} : Slot{b(k), false};
    tris.push_back(Triangle{{first, Slot{s(k), false}, last}});
  }
  return Triangulation(Surface{0, n}, std::move(tris));
}

// Fanned 4g-gon with side word a b a^-1 b^-1 repeated; all polygon corners are
// one puncture. Extra punctures are coned into the first fan triangles.
Triangulation genus_reference(int g, int b) {
  int sides = 4 * g;
  auto handle_edge = [&](int k) -> Slot {  // polygon side k as an edge slot
    int j = k / 4, r = k % 4;
    int a = 2 * j, bb = 2 * j + 1;
    switch (r) {
      case 0: return Slot{a, true};
      case 1: return Slot{bb, true};
      case 2: return Slot{a, false};
      default: return Slot{bb, false};
    }
  };
  auto d = [&](int k) { return 2 * g + (k - 2); };  // fan diagonal to corner k

  std::vector<Triangle> tris;
  for (int k = 1; k <= sides - 2; ++k) {
    Slot first = (k == 1) ? handle_edge(0) : Slot{d(k), true};
    Slot last = (k == sides - 2) ? handle_edge(sides - 1) : Slot{d(k + 1), false};
    tris.push_back(Triangle{{first, handle_edge(k), last}});
  }

  int next_edge = 6 * g - 3;
  if (b - 1 > static_cast<int>(tris.size()))
    throw Error(ErrorKind::Unsupported, "not enough fan triangles to cone punctures into");
  for (int p = 0; p < b - 1; ++p) {
    Triangle t = tris[p];
    int e0 = next_edge++, e1 = next_edge++, e2 = next_edge++;
    tris[p] = Triangle{{t.side[0], Slot{e1, true}, Slot{e0, false}}};
    tris.push_back(Triangle{{t.side[1], Slot{e2, true}, Slot{e1, false}}});
    tris.push_back(Triangle{{t.side[2], Slot{e0, true}, Slot{e2, false}}});
  }
  return Triangulation(Surface{g, b}, std::move(tris));
}

}  // namespace

Triangulation Triangulation::reference(Surface s) {
  require_curve_system(s);
  if (s.genus == 0) return planar_reference(s.punctures);
  return genus_reference(s.genus, s.punctures);
}

}  // namespace ccx
