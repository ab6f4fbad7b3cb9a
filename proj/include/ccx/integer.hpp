#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ccx {

// Curve coordinates grow exponentially under twisting, so everything that
// stores or counts intersections uses arbitrary precision.
using Int = boost::multiprecision::cpp_int;

using Coords = std::vector<Int>;

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_int(const Int& v) {
  // Hash the decimal expansion; slow path but only used for dedup sets.
  std::uint64_t h = v < 0 ? 0x5851f42d4c957f2dULL : 0x14057b7ef767814fULL;
  for (char c : v.str()) h = mix64(h ^ static_cast<std::uint64_t>(c));
  return h;
}

inline std::uint64_t hash_coords(const Coords& w) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
  for (const Int& v : w) h = mix64(h ^ hash_int(v));
  return h;
}

inline long to_long(const Int& v) { return static_cast<long>(v); }

}  // namespace ccx
