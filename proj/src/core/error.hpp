#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobloc {

enum class Errc {
  ParseFailure,
  DimensionMismatch,
  InvalidArgument,
  SquareFreeViolation,
  DegenerateIdeal,
  Overflow,
  InadmissibleStratum,
  ResourceLimit,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::ParseFailure, what + " at position " + std::to_string(position)),
        position_(position) {}

  // 0-based character offset of the offending token.
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace frobloc
