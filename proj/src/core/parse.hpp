#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ideal.hpp"

namespace frobloc {

/// Textual ideal as written: generators in input order, not yet minimalized.
struct IdealExpression {
  std::size_t nvars = 0;
  std::vector<std::vector<Exponent>> generators;

  MonomialIdeal to_ideal() const;
  friend bool operator==(const IdealExpression&, const IdealExpression&) = default;
};

// Grammar: generator ("," generator)*, generator := factor ("*" factor)*,
// factor := "x" k ["^" e] with k >= 1. Whitespace is ignored. A repeated variable
// accumulates its exponent. nvars defaults to the largest index seen.
// Throws ParseError with the offending character offset.
IdealExpression parse_ideal(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

std::string render(const IdealExpression& expr);

}  // namespace frobloc
