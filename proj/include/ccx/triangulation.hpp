#pragma once

#include <array>
#include <string>
#include <vector>

#include "ccx/errors.hpp"
#include "ccx/integer.hpp"
#include "ccx/surface.hpp"

namespace ccx {

// One side of a triangle: the edge it runs along, and whether the side's ccw
// traversal agrees with the edge's stored direction.
struct Slot {
  int edge = -1;
  bool fwd = true;
  bool operator==(const Slot&) const = default;
};

struct Triangle {
  std::array<Slot, 3> side;
  bool operator==(const Triangle&) const = default;
};

// Triangle index + side index; identifies one of the two appearances of an edge.
struct SlotRef {
  int tri = -1;
  int side = -1;
  bool operator==(const SlotRef&) const = default;
};

// Ideal triangulation of a punctured oriented surface.
//
// Invariants (validated on construction):
//  - every triangle is ccw; corner i sits between sides i-1 and i, so side i
//    runs from corner i to corner i+1 (indices mod 3);
//  - every edge appears in exactly two slots, once along and once against its
//    direction (the two slots may lie in the same triangle: a self-folded
//    triangle enclosing a puncture);
//  - the dual graph is connected;
//  - #triangles - #edges == 2 - 2g - b, and the ideal vertex classes are in
//    bijection with the punctures.
class Triangulation {
 public:
  Triangulation(Surface s, std::vector<Triangle> tris);

  // Pinned layout per surface. Genus 0: a doubled ideal polygon, both copies
  // fanned from puncture 1. Genus g >= 1: the fanned 4g-gon with standard side
  // identifications, then one cone vertex per extra puncture.
  static Triangulation reference(Surface s);

  const Surface& surface() const { return surface_; }
  int num_edges() const { return num_edges_; }
  int num_triangles() const { return static_cast<int>(tris_.size()); }
  const Triangle& triangle(int t) const { return tris_[t]; }
  const std::vector<Triangle>& triangles() const { return tris_; }

  // Both appearances of an edge: [0] the fwd slot, [1] the bwd slot.
  const std::array<SlotRef, 2>& slots_of(int edge) const { return edge_slots_[edge]; }
  SlotRef opposite(SlotRef r) const;
  const Slot& slot(SlotRef r) const { return tris_[r.tri].side[r.side]; }

  int num_vertices() const { return num_vertices_; }
  int vertex_of_corner(int tri, int corner) const { return corner_vertex_[3 * tri + corner]; }
  // Crossing counts of the small loop around vertex v (one per edge end at v).
  Coords vertex_link(int v) const;

  // An edge is flippable unless both of its slots lie in the same triangle
  // (the inner edge of a self-folded triangle).
  bool flippable(int edge) const;
  Triangulation flipped(int edge) const;
  // Normal coordinates of the same multicurve after flipping `edge`.
  Coords flip_coords(int edge, const Coords& w) const;

  // Renames edge k to perm[k] everywhere. perm must be a bijection.
  Triangulation relabeled(const std::vector<int>& perm) const;
  static Coords relabel_coords(const std::vector<int>& perm, const Coords& w);

  // Equality of labeled gluings: same edge labels, triangle order and side
  // rotation free. Edge directions carry no structure and are ignored.
  std::string canonical_key() const;
  bool same_labeled(const Triangulation& other) const;

  void check_coords_shape(const Coords& w) const;

 private:
  void build_tables();  // edge_slots_, corner_vertex_, num_vertices_; validates

  Surface surface_;
  std::vector<Triangle> tris_;
  int num_edges_ = 0;
  std::vector<std::array<SlotRef, 2>> edge_slots_;
  std::vector<int> corner_vertex_;
  int num_vertices_ = 0;
};

}  // namespace ccx
