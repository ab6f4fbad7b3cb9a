#include <doctest.h>

#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "ccx/curve.hpp"
#include "ccx/intersect.hpp"
#include "ccx/overlay.hpp"
#include "ccx/rng.hpp"
#include "ccx/surface.hpp"
#include "ccx/triangulation.hpp"

using namespace ccx;

namespace {

Coords torus_slope(long p, long q) {
  auto a = [](long v) { return v < 0 ? -v : v; };
  return Coords{Int(a(q)), Int(a(p)), Int(a(p - q))};
}

// ---------------------------------------------------------------------------
// Exhaustive oracle, written from scratch against the coordinate conventions
// only: enumerate every interleaving of the two point sets edge by edge and
// count chord crossings triangle by triangle. Slow and obviously correct.

struct OracleArc {
  int tri;
  int corner;
  long depth;
};

std::vector<OracleArc> oracle_arcs(const Triangulation& T, const Coords& w) {
  std::vector<OracleArc> arcs;
  for (int t = 0; t < T.num_triangles(); ++t) {
    long side[3];
    for (int i = 0; i < 3; ++i) side[i] = to_long(w[T.triangle(t).side[i].edge]);
    for (int c = 0; c < 3; ++c) {
      long n = (side[(c + 2) % 3] + side[c] - side[(c + 1) % 3]) / 2;
      for (long d = 0; d < n; ++d) arcs.push_back(OracleArc{t, c, d});
    }
  }
  return arcs;
}

// Placement on one edge: fwd-ordered list saying which curve owns each merged
// position (false = first curve, true = second).
using EdgeOrder = std::vector<bool>;

struct OraclePlacement {
  std::vector<EdgeOrder> edges;

  // Merged fwd position of the k-th point (fwd order) of curve `second` on e.
  long merged(int e, bool second, long k) const {
    const EdgeOrder& ord = edges[e];
    long seen = 0;
    for (long i = 0; i < static_cast<long>(ord.size()); ++i) {
      if (ord[i] == second) {
        if (seen == k) return i;
        ++seen;
      }
    }
    REQUIRE(false);
    return -1;
  }
};

// Boundary position of an arc endpoint along a side's ccw traversal.
struct OracleKey {
  int side;
  long pos;
  auto operator<=>(const OracleKey&) const = default;
};

OracleKey oracle_key(const Triangulation& T, const Coords& own,
                     const OraclePlacement& pl, bool second,
                     const OracleArc& a, bool at_following_side) {
  // The arc clips `corner`; its endpoints sit at own-depth `depth` from the
  // corner on sides corner-1 and corner.
  int s = at_following_side ? a.corner : (a.corner + 2) % 3;
  Slot slot = T.triangle(a.tri).side[s];
  long w_own = to_long(own[slot.edge]);
  // Own position along the side's ccw traversal: the corner sits at the start
  // of side `corner` and at the end of side `corner-1`.
  long own_local = at_following_side ? a.depth : w_own - 1 - a.depth;
  long own_fwd = slot.fwd ? own_local : w_own - 1 - own_local;
  long merged_fwd = pl.merged(slot.edge, second, own_fwd);
  long total = static_cast<long>(pl.edges[slot.edge].size());
  long merged_local = slot.fwd ? merged_fwd : total - 1 - merged_fwd;
  return OracleKey{s, merged_local};
}

bool oracle_between(const OracleKey& a, const OracleKey& x,
                    const OracleKey& b) {
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

long oracle_count(const Triangulation& T, const Coords& wa, const Coords& wb,
                  const std::vector<OracleArc>& arcs_a,
                  const std::vector<OracleArc>& arcs_b,
                  const OraclePlacement& pl) {
  long crossings = 0;
  for (const OracleArc& ra : arcs_a) {
    OracleKey a1 = oracle_key(T, wa, pl, false, ra, false);
    OracleKey a2 = oracle_key(T, wa, pl, false, ra, true);
    for (const OracleArc& rb : arcs_b) {
      if (rb.tri != ra.tri) continue;
      OracleKey b1 = oracle_key(T, wb, pl, true, rb, false);
      OracleKey b2 = oracle_key(T, wb, pl, true, rb, true);
      if (oracle_between(a1, b1, a2) != oracle_between(a1, b2, a2))
        ++crossings;
    }
  }
  return crossings;
}

double log_placement_count(const Triangulation& T, const Coords& wa,
                           const Coords& wb) {
  double lg = 0;
  for (int e = 0; e < T.num_edges(); ++e) {
    long r = to_long(wa[e]), b = to_long(wb[e]);
    for (long i = 1; i <= r; ++i)
      lg += std::log2(double(b + i)) - std::log2(double(i));
  }
  return lg;
}

long oracle_min_crossings(const Triangulation& T, const Coords& wa,
                          const Coords& wb) {
  // Enumerate all per-edge interleavings via one big odometer.
  std::vector<OracleArc> arcs_a = oracle_arcs(T, wa);
  std::vector<OracleArc> arcs_b = oracle_arcs(T, wb);
  std::vector<EdgeOrder> orders(T.num_edges());
  long best = -1;
  auto recurse = [&](auto&& self, int e) -> void {
    if (e == T.num_edges()) {
      OraclePlacement pl{orders};
      long c = oracle_count(T, wa, wb, arcs_a, arcs_b, pl);
      if (best < 0 || c < best) best = c;
      return;
    }
    long r = to_long(wa[e]), b = to_long(wb[e]);
    EdgeOrder ord(static_cast<std::size_t>(r + b), false);
    // All ways to choose which of the r+b merged positions are second-curve.
    std::vector<long> pick(static_cast<std::size_t>(b));
    auto choose = [&](auto&& chooser, long from, long k) -> void {
      if (k == b) {
        std::fill(ord.begin(), ord.end(), false);
        for (long idx : pick) ord[static_cast<std::size_t>(idx)] = true;
        orders[e] = ord;
        self(self, e + 1);
        return;
      }
      for (long i = from; i < r + b; ++i) {
        pick[static_cast<std::size_t>(k)] = i;
        chooser(chooser, i + 1, k + 1);
      }
    };
    choose(choose, 0, 0);
  };
  recurse(recurse, 0);
  return best;
}

// ---------------------------------------------------------------------------

std::vector<Coords> enumerate_small(const Triangulation& T, long cap,
                                    long max_total, bool connected_only) {
  std::vector<Coords> out;
  int ne = T.num_edges();
  Coords w(ne, 0);
  auto step = [&]() {
    for (int i = 0; i < ne; ++i) {
      if (w[i] < cap) {
        w[i] += 1;
        for (int j = 0; j < i; ++j) w[j] = 0;
        return true;
      }
    }
    return false;
  };
  do {
    Int total = total_weight(w);
    if (total == 0 || total > max_total) continue;
    try {
      validate_multicurve(T, w);
    } catch (const Error&) {
      continue;
    }
    if (connected_only) {
      Trace tr = trace_multicurve(T, w);
      if (tr.components.size() != 1) continue;
      if (peripheral_vertex(T, w)) continue;
    }
    out.push_back(w);
  } while (step());
  return out;
}

std::vector<std::pair<long, long>> coprime_slopes(long bound) {
  std::vector<std::pair<long, long>> out;
  out.emplace_back(1, 0);
  for (long q = 1; q <= bound; ++q)
    for (long p = -bound; p <= bound; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) out.emplace_back(p, q);
  return out;
}

}  // namespace

TEST_CASE("torus slopes meet in the determinant") {
  Triangulation T = Triangulation::reference(Surface{1, 1});
  IntersectionCache cache(T);
  auto slopes = coprime_slopes(5);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = i; j < slopes.size(); ++j) {
      auto [p, q] = slopes[i];
      auto [r, s] = slopes[j];
      long det = p * s - q * r;
      if (det < 0) det = -det;
      INFO("slopes ", p, "/", q, " and ", r, "/", s);
      Int got = cache.geometric(torus_slope(p, q), torus_slope(r, s));
      CHECK(got == det);
    }
  }
}

TEST_CASE("signed sums on the torus match the determinant up to sign") {
  Triangulation T = Triangulation::reference(Surface{1, 1});
  auto slopes = coprime_slopes(4);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    for (std::size_t j = 0; j < slopes.size(); ++j) {
      auto [p, q] = slopes[i];
      auto [r, s] = slopes[j];
      long det = p * s - q * r;
      if (det < 0) det = -det;
      long alg = algebraic_intersection(T, torus_slope(p, q), torus_slope(r, s));
      INFO("slopes ", p, "/", q, " and ", r, "/", s);
      CHECK((alg < 0 ? -alg : alg) == det);
    }
  }
}

TEST_CASE("minimisation agrees with exhaustive placement search") {
  Rng rng(20260822);

  auto run_pairs = [&](const Triangulation& T,
                       const std::vector<Coords>& pool, int budget) {
    int done = 0;
    std::size_t n = pool.size();
    REQUIRE(n >= 2);
    while (done < budget) {
      const Coords& a = pool[rng.below(n)];
      const Coords& b = pool[rng.below(n)];
      if (log_placement_count(T, a, b) > 17) continue;
      long want = oracle_min_crossings(T, a, b);
      Int got = geometric_intersection(T, a, b);
      CAPTURE(done);
      REQUIRE(got == want);
      ++done;
    }
  };

  SUBCASE("one-holed torus") {
    Triangulation T = Triangulation::reference(Surface{1, 1});
    std::vector<Coords> pool;
    for (auto [p, q] : coprime_slopes(3)) pool.push_back(torus_slope(p, q));
    run_pairs(T, pool, 60);
  }
  SUBCASE("five-holed sphere, single curves") {
    Triangulation T = Triangulation::reference(Surface{0, 5});
    std::vector<Coords> pool = enumerate_small(T, 2, 8, true);
    run_pairs(T, pool, 40);
  }
  SUBCASE("five-holed sphere, multicurves") {
    Triangulation T = Triangulation::reference(Surface{0, 5});
    std::vector<Coords> pool = enumerate_small(T, 1, 7, false);
    run_pairs(T, pool, 40);
  }
  SUBCASE("two-holed torus") {
    Triangulation T = Triangulation::reference(Surface{1, 2});
    std::vector<Coords> pool = enumerate_small(T, 2, 6, true);
    run_pairs(T, pool, 30);
  }
}

TEST_CASE("intersection is symmetric, vanishes on itself, survives flips") {
  Triangulation T = Triangulation::reference(Surface{0, 5});
  std::vector<Coords> pool = enumerate_small(T, 2, 9, true);
  Rng rng(7);
  IntersectionCache cache(T);
  for (int it = 0; it < 25; ++it) {
    const Coords& a = pool[rng.below(pool.size())];
    const Coords& b = pool[rng.below(pool.size())];
    Int ab = cache.geometric(a, b);
    CHECK(ab == cache.geometric(b, a));
    CHECK(cache.geometric(a, a) == 0);

    int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(T.num_edges())));
    if (T.flippable(e)) {
      Triangulation T2 = T.flipped(e);
      Int ab2 = geometric_intersection(T2, T.flip_coords(e, a), T.flip_coords(e, b));
      CHECK(ab == ab2);
    }
  }
}

TEST_CASE("vertex links meet nothing") {
  for (Surface s : {Surface{0, 5}, Surface{1, 2}}) {
    Triangulation T = Triangulation::reference(s);
    std::vector<Coords> pool = enumerate_small(T, 2, 8, true);
    Rng rng(11);
    for (int v = 0; v < T.num_vertices(); ++v) {
      Coords link = T.vertex_link(v);
      for (int it = 0; it < 4; ++it) {
        const Coords& b = pool[rng.below(pool.size())];
        CHECK(geometric_intersection(T, link, b) == 0);
      }
      CHECK(geometric_intersection(T, link, link) == 0);
    }
  }
}

TEST_CASE("crossing counts never beat the minimum and share its parity") {
  Triangulation T = Triangulation::reference(Surface{0, 5});
  std::vector<Coords> pool = enumerate_small(T, 2, 9, true);
  Rng rng(13);
  for (int it = 0; it < 20; ++it) {
    const Coords& a = pool[rng.below(pool.size())];
    const Coords& b = pool[rng.below(pool.size())];
    Overlay ov(T, a, b);
    Int min = geometric_intersection(T, a, b);
    CHECK(Int(ov.count()) >= min);
    CHECK((ov.count() - to_long(min)) % 2 == 0);
    long alg = ov.signed_sum();
    CHECK(Int(alg < 0 ? -alg : alg) <= min);
  }
}

TEST_CASE("shortening reaches locally minimal weight and carries companions") {
  Triangulation T = Triangulation::reference(Surface{0, 5});
  std::vector<Coords> pool = enumerate_small(T, 2, 9, true);
  Rng rng(17);
  for (int it = 0; it < 15; ++it) {
    const Coords& a = pool[rng.below(pool.size())];
    Shortened s = shorten_curve(T, a);
    // Essential curves on this surface always flatten to two crossings.
    CHECK(total_weight(s.w) == 2);
    // No flip improves the endpoint.
    for (int e = 0; e < s.T.num_edges(); ++e) {
      if (!s.T.flippable(e)) continue;
      CHECK(total_weight(s.T.flip_coords(e, s.w)) >= 2);
    }
    // The transported companion stays the same curve: intersection with a
    // third curve is unchanged.
    const Coords& b = pool[rng.below(pool.size())];
    Coords b2 = transport_coords(T, s.flips, b);
    Int before = geometric_intersection(T, a, b);
    Int after = geometric_intersection(s.T, s.w, b2);
    CHECK(before == after);
  }
}
