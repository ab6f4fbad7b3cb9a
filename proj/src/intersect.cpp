#include "ccx/intersect.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "ccx/errors.hpp"
#include "ccx/overlay.hpp"

namespace ccx {

namespace {

std::string coords_string(const Coords& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

}  // namespace

Coords transport_coords(const Triangulation& T, const std::vector<int>& flips,
                        const Coords& w) {
  Triangulation cur = T;
  Coords out = w;
  for (int e : flips) {
    out = cur.flip_coords(e, out);
    cur = cur.flipped(e);
  }
  return out;
}

Shortened shorten_curve(const Triangulation& T, const Coords& w,
                        int plateau_states, int plateau_depth) {
  validate_multicurve(T, w);
  Shortened s{T, {}, w};
  Int total = total_weight(w);

  auto descend_once = [&]() {
    // Direct strict descent: cheapest first by new total, ties to the
    // smallest edge index.
    int best_e = -1;
    Int best_total = total;
    Coords best_w;
    for (int e = 0; e < s.T.num_edges(); ++e) {
      if (!s.T.flippable(e)) continue;
      Coords w2 = s.T.flip_coords(e, s.w);
      Int t2 = total_weight(w2);
      if (t2 < best_total) {
        best_total = t2;
        best_e = e;
        best_w = w2;
      }
    }
    if (best_e >= 0) {
      s.T = s.T.flipped(best_e);
      s.w = std::move(best_w);
      s.flips.push_back(best_e);
      total = best_total;
      return true;
    }

    // Wander the equal-weight plateau breadth-first until some state has a
    // strict descent.
    struct State {
      Triangulation T;
      Coords w;
      std::vector<int> path;
    };
    std::deque<State> queue;
    std::set<std::string> seen;
    queue.push_back(State{s.T, s.w, {}});
    seen.insert(s.T.canonical_key() + ";" + coords_string(s.w));
    int popped = 0;
    while (!queue.empty() && popped < plateau_states) {
      State st = std::move(queue.front());
      queue.pop_front();
      ++popped;
      for (int e = 0; e < st.T.num_edges(); ++e) {
        if (!st.T.flippable(e)) continue;
        Coords w2 = st.T.flip_coords(e, st.w);
        Int t2 = total_weight(w2);
        if (t2 > total) continue;
        Triangulation T2 = st.T.flipped(e);
        if (t2 < total) {
          for (int f : st.path) {
            s.T = s.T.flipped(f);
            s.flips.push_back(f);
          }
          s.T = std::move(T2);
          s.w = std::move(w2);
          s.flips.push_back(e);
          total = std::move(t2);
          return true;
        }
        if (static_cast<int>(st.path.size()) + 1 > plateau_depth) continue;
        std::string key = T2.canonical_key() + ";" + coords_string(w2);
        if (!seen.insert(key).second) continue;
        State nxt{std::move(T2), std::move(w2), st.path};
        nxt.path.push_back(e);
        queue.push_back(std::move(nxt));
      }
    }
    return false;
  };

  while (total > 2) {
    if (!descend_once()) break;
  }
  return s;
}

IntersectionCache::IntersectionCache(Triangulation T) : T_(std::move(T)) {}

Int IntersectionCache::component_pair(const Coords& a, const Coords& b) {
  if (a == b) return Int(0);
  if (peripheral_vertex(T_, a) || peripheral_vertex(T_, b)) return Int(0);

  std::string ka = coords_string(a), kb = coords_string(b);
  Int wa = total_weight(a), wb = total_weight(b);
  bool a_moves = (wa < wb) || (wa == wb && ka <= kb);
  const Coords& mover = a_moves ? a : b;
  const Coords& other = a_moves ? b : a;
  std::string key = a_moves ? ka + "|" + kb : kb + "|" + ka;
  auto hit = memo_.find(key);
  if (hit != memo_.end()) return hit->second;

  Shortened s = shorten_curve(T_, mover);
  Coords carried = transport_coords(T_, s.flips, other);
  Int result = min_crossings_small_red(s.T, s.w, carried);
  memo_.emplace(std::move(key), result);
  return result;
}

Int IntersectionCache::geometric(const Coords& a, const Coords& b) {
  Trace ta = trace_multicurve(T_, a);
  Trace tb = trace_multicurve(T_, b);
  Int sum(0);
  for (const TracedComponent& x : ta.components)
    for (const TracedComponent& y : tb.components)
      sum += component_pair(x.coords, y.coords);
  return sum;
}

bool IntersectionCache::disjoint(const Coords& a, const Coords& b) {
  return geometric(a, b) == 0;
}

Int geometric_intersection(const Triangulation& T, const Coords& a,
                           const Coords& b) {
  IntersectionCache cache(T);
  return cache.geometric(a, b);
}

long algebraic_intersection(const Triangulation& T, const Coords& a,
                            const Coords& b) {
  Overlay ov(T, a, b);
  return ov.signed_sum();
}

}  // namespace ccx
