#include <doctest.h>

#include <functional>

#include "ccx/curve.hpp"
#include "ccx/triangulation.hpp"

using namespace ccx;

namespace {

Coords coords(std::initializer_list<long> xs) {
  Coords w;
  for (long x : xs) w.emplace_back(x);
  return w;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a typed error");
  return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("reference layouts have the pinned sizes") {
  struct Row {
    Surface s;
    int edges, tris;
  };
  // #tris = -2 chi, #edges = -3 chi for every ideal triangulation.
  const Row rows[] = {
      {{0, 4}, 6, 4},  {{0, 5}, 9, 6},  {{0, 6}, 12, 8},
      {{1, 1}, 3, 2},  {{1, 2}, 6, 4},  {{1, 3}, 9, 6},
  };
  for (const Row& r : rows) {
    CAPTURE(r.s.name());
    Triangulation T = Triangulation::reference(r.s);
    CHECK(T.num_edges() == r.edges);
    CHECK(T.num_triangles() == r.tris);
    CHECK(T.num_vertices() == r.s.punctures);
  }
}

TEST_CASE("complexity gate and closed surfaces are rejected") {
  CHECK(kind_of([] { Triangulation::reference(Surface{0, 3}); }) == ErrorKind::ComplexityTooLow);
  CHECK(kind_of([] { Triangulation::reference(Surface{1, 0}); }) == ErrorKind::ComplexityTooLow);
  CHECK(kind_of([] { Triangulation::reference(Surface{2, 0}); }) == ErrorKind::Unsupported);
}

TEST_CASE("vertex links trace to one peripheral component") {
  for (Surface s : {Surface{0, 5}, Surface{1, 2}, Surface{1, 3}, Surface{0, 6}}) {
    CAPTURE(s.name());
    Triangulation T = Triangulation::reference(s);
    for (int v = 0; v < T.num_vertices(); ++v) {
      Coords link = T.vertex_link(v);
      Trace tr = trace_multicurve(T, link);
      REQUIRE(tr.components.size() == 1);
      CHECK(tr.components[0].coords == link);
      CHECK(peripheral_vertex(T, link) == v);
      CHECK_FALSE(is_essential_curve(T, link));
    }
  }
}

TEST_CASE("S_{1,1} slope curves are essential and traced in order") {
  Triangulation T = Triangulation::reference(Surface{1, 1});
  for (Coords w : {coords({0, 1, 1}), coords({1, 0, 1}), coords({1, 1, 0})}) {
    Trace tr = validate_curve(T, w);
    CHECK(tr.components[0].points.size() == 2);
    CHECK(is_essential_curve(T, w));
  }
}

TEST_CASE("S_{0,4} curve around two punctures") {
  Triangulation T = Triangulation::reference(Surface{0, 4});
  // Crosses s2, s4, and both diagonals once; disjoint from s1, s3.
  Coords w = coords({0, 1, 0, 1, 1, 1});
  Trace tr = validate_curve(T, w);
  CHECK(tr.components[0].points.size() == 4);

  // Two points on s1 and s2 close up around puncture 2 instead.
  CHECK(peripheral_vertex(T, coords({1, 1, 0, 0, 0, 0})).has_value());
}

TEST_CASE("validation reports the specific failure") {
  Triangulation T = Triangulation::reference(Surface{0, 5});
  CHECK(kind_of([&] { validate_curve(T, Coords(T.num_edges(), 0)); }) ==
        ErrorKind::NullHomotopic);
  CHECK(kind_of([&] { validate_curve(T, coords({1, 0, 0, 0, 0, 0, 0, 0, 0})); }) ==
        ErrorKind::ParityViolation);
  CHECK(kind_of([&] { validate_curve(T, coords({2, 0, 0, 0, 0, 0, 0, 0, 0})); }) ==
        ErrorKind::CornerNegative);
  CHECK(kind_of([&] { validate_curve(T, Coords(10, 1)); }) == ErrorKind::IncompatibleTriangulation);
  CHECK(kind_of([&] { validate_curve(T, T.vertex_link(0)); }) == ErrorKind::Peripheral);

  // Sum of two disjoint vertex links is a two-component multicurve.
  Coords two = T.vertex_link(1);
  Coords other = T.vertex_link(3);
  for (size_t i = 0; i < two.size(); ++i) two[i] += other[i];
  validate_multicurve(T, two);
  if (trace_multicurve(T, two).components.size() == 2)
    CHECK(kind_of([&] { validate_curve(T, two); }) == ErrorKind::Disconnected);
}

TEST_CASE("parallel copies trace as repeated components") {
  Triangulation T = Triangulation::reference(Surface{1, 1});
  Coords w = coords({2, 2, 0});
  Trace tr = trace_multicurve(T, w);
  REQUIRE(tr.components.size() == 2);
  CHECK(tr.components[0].coords == coords({1, 1, 0}));
  CHECK(tr.components[1].coords == coords({1, 1, 0}));
}

TEST_CASE("flips: involution, validity, and coordinate transport") {
  for (Surface s : {Surface{1, 1}, Surface{0, 4}, Surface{0, 5}, Surface{1, 2}}) {
    CAPTURE(s.name());
    Triangulation T = Triangulation::reference(s);
    for (int e = 0; e < T.num_edges(); ++e) {
      if (!T.flippable(e)) continue;
      Triangulation F = T.flipped(e);
      CHECK(F.num_edges() == T.num_edges());
      CHECK(F.flipped(e).same_labeled(T));

      for (int v = 0; v < T.num_vertices(); ++v) {
        Coords link = T.vertex_link(v);
        Coords moved = T.flip_coords(e, link);
        validate_multicurve(F, moved);
        CHECK(moved == F.vertex_link(v));
        CHECK(F.flip_coords(e, moved) == link);
      }
    }
  }
}

TEST_CASE("flip transport keeps component structure") {
  Triangulation T = Triangulation::reference(Surface{0, 5});
  // Curve around punctures 1 and 2: crosses s2, s5 and all four diagonals once.
  Coords w = coords({0, 1, 0, 0, 1, 1, 1, 1, 1});
  Trace before = validate_curve(T, w);
  for (int e = 0; e < T.num_edges(); ++e) {
    if (!T.flippable(e)) continue;
    Triangulation F = T.flipped(e);
    Coords moved = T.flip_coords(e, w);
    Trace after = validate_curve(F, moved);
    CHECK(after.components.size() == before.components.size());
  }
}

TEST_CASE("relabeling permutes coordinates coherently") {
  Triangulation T = Triangulation::reference(Surface{1, 1});
  std::vector<int> perm{2, 0, 1};
  Triangulation R = T.relabeled(perm);
  Coords w = coords({1, 1, 0});
  Coords rw = Triangulation::relabel_coords(perm, w);
  CHECK(rw == coords({1, 0, 1}));
  validate_curve(R, rw);
}

TEST_CASE("self-folded triangles are handled and their inner edge is pinned") {
  // Two flips on S_{0,4} produce a triangulation with a self-folded triangle;
  // find one and check the machinery stays coherent.
  Triangulation T = Triangulation::reference(Surface{0, 4});
  bool found = false;
  for (int e1 = 0; e1 < T.num_edges() && !found; ++e1) {
    if (!T.flippable(e1)) continue;
    Triangulation F1 = T.flipped(e1);
    for (int e2 = 0; e2 < F1.num_edges() && !found; ++e2) {
      if (!F1.flippable(e2)) continue;
      Triangulation F2 = F1.flipped(e2);
      for (int e = 0; e < F2.num_edges(); ++e) {
        if (F2.flippable(e)) continue;
        found = true;  // inner edge of a self-folded triangle
        CHECK(F2.slots_of(e)[0].tri == F2.slots_of(e)[1].tri);
        for (int v = 0; v < F2.num_vertices(); ++v)
          trace_multicurve(F2, F2.vertex_link(v));
      }
    }
  }
  CHECK(found);
}
