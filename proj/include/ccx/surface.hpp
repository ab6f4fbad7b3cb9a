#pragma once

#include <string>

#include "ccx/errors.hpp"

namespace ccx {

// Compact orientable surface S_{g,b} with b punctures (b >= 1 in this toolkit:
// the curve kernel works on ideal triangulations, which need ideal vertices).
struct Surface {
  int genus = 0;
  int punctures = 0;

  int complexity() const { return 3 * genus - 3 + punctures; }

  bool operator==(const Surface&) const = default;

  std::string name() const {
    return "S_{" + std::to_string(genus) + "," + std::to_string(punctures) + "}";
  }

  static Surface parse(const std::string& text);  // "g,b" or "S_{g,b}"
};

inline void require_curve_system(const Surface& s) {
  if (s.complexity() < 1)
    throw Error(ErrorKind::ComplexityTooLow,
                s.name() + " has complexity " + std::to_string(s.complexity()));
  if (s.punctures < 1)
    throw Error(ErrorKind::Unsupported, "closed surfaces are out of scope");
}

}  // namespace ccx
