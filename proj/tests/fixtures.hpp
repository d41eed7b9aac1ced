#pragma once

#include <vector>

#include "colon_structure.hpp"
#include "parse.hpp"

namespace fixtures {

inline frobloc::MonomialIdeal ideal(const char* text) { return frobloc::parse_ideal(text).to_ideal(); }
inline frobloc::MonomialIdeal ideal(const char* text, std::size_t n) { return frobloc::parse_ideal(text, n).to_ideal(); }
inline frobloc::SquareFreeIdeal square_free(const char* text) { return frobloc::validate_square_free(ideal(text)); }

inline const std::vector<const char*>& named() {
  static const std::vector<const char*> all = {
      "x1*x2, x2*x3",
      "x1*x2*x3, x3*x4",
      "x1*x2*x3, x3*x4, x4*x5",
  };
  return all;
}

}  // namespace fixtures
