#include "ccx/walk.hpp"

#include <algorithm>

namespace ccx {

void validate_walk(const Triangulation& T, const Walk& w) {
  const auto& s = w.steps;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].tri < 0 || s[i].tri >= T.num_triangles() || s[i].side < 0 || s[i].side >= 3)
      throw Error(ErrorKind::BadInput, "walk step out of range");
    const SlotRef& next = s[(i + 1) % s.size()];
    if (T.opposite(next).tri != s[i].tri)
      throw Error(ErrorKind::BadInput,
                  "walk step " + std::to_string(i + 1) + " does not leave triangle " +
                      std::to_string(s[i].tri));
  }
}

Walk reduce_walk(const Triangulation& T, Walk w) {
  // Linear stack pass: a step equal to opposite(previous) cancels the pair.
  std::vector<SlotRef> out;
  out.reserve(w.steps.size());
  for (const SlotRef& s : w.steps) {
    if (!out.empty() && s == T.opposite(out.back()))
      out.pop_back();
    else
      out.push_back(s);
  }
  // Seam: the pair (last, first) is consecutive too.
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == T.opposite(out[hi - 1])) {
    ++lo;
    --hi;
  }
  Walk r;
  r.steps.assign(out.begin() + lo, out.begin() + hi);
  return r;
}

Coords walk_coords(const Triangulation& T, const Walk& w) {
  Coords c(T.num_edges(), 0);
  for (const SlotRef& s : w.steps) c[T.slot(s).edge] += 1;
  return c;
}

Walk canonical_rotation(const Walk& w) {
  if (w.steps.empty()) return w;
  auto key = [&](const SlotRef& s) { return std::pair<int, int>(s.tri, s.side); };
  std::size_t n = w.steps.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      auto a = key(w.steps[(cand + k) % n]);
      auto b = key(w.steps[(best + k) % n]);
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  Walk r;
  r.steps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) r.steps.push_back(w.steps[(best + k) % n]);
  return r;
}

}  // namespace ccx
