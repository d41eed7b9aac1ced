#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ideal.hpp"

namespace frobloc {

/// The affine form slope * q + offset, read uniformly for every q >= 2.
struct SymbolicExponent {
  std::uint32_t slope = 0;
  std::int64_t offset = 0;

  static constexpr SymbolicExponent zero() { return {0, 0}; }
  static constexpr SymbolicExponent q_minus_one() { return {1, -1}; }
  static constexpr SymbolicExponent q() { return {1, 0}; }

  // Value at a concrete q; throws Error(InvalidArgument) for q < 2 or a negative value,
  // Error(Overflow) when the value does not fit an Exponent.
  Exponent at(std::uint64_t q) const;

  friend auto operator<=>(const SymbolicExponent&, const SymbolicExponent&) = default;
};

// Linear in q, so checking the slope and the q = 2 endpoint decides it for all q >= 2.
bool uniformly_leq(const SymbolicExponent& a, const SymbolicExponent& b) noexcept;
// Larger of the two when one dominates uniformly, nullopt otherwise.
std::optional<SymbolicExponent> uniform_max(const SymbolicExponent& a, const SymbolicExponent& b) noexcept;

std::string to_string(const SymbolicExponent& x);

class SymbolicMonomial {
public:
  SymbolicMonomial() = default;
  explicit SymbolicMonomial(std::vector<SymbolicExponent> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const noexcept { return exps_.size(); }
  const SymbolicExponent& operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<SymbolicExponent>& exponents() const noexcept { return exps_; }

  Monomial at(std::uint64_t q) const;

  friend auto operator<=>(const SymbolicMonomial&, const SymbolicMonomial&) = default;

private:
  std::vector<SymbolicExponent> exps_;
};

bool uniformly_divides(const SymbolicMonomial& a, const SymbolicMonomial& b);
// Throws Error(InvalidArgument) if some coordinate has no uniform maximum.
SymbolicMonomial uniform_lcm(const SymbolicMonomial& a, const SymbolicMonomial& b);
// Exponentwise max(a_i - c_i, 0) against a concrete monomial, i.e. lcm(a, c) / c.
SymbolicMonomial colon(const SymbolicMonomial& a, const Monomial& c);
// The q-scaling of a concrete monomial: c_i -> c_i * q.
SymbolicMonomial frobenius_image(const Monomial& m);

std::string to_string(const SymbolicMonomial& m);

/// Minimal antichain of symbolic monomials under uniform divisibility.
class SymbolicIdeal {
public:
  explicit SymbolicIdeal(std::size_t nvars) : nvars_(nvars) {}
  SymbolicIdeal(std::size_t nvars, std::vector<SymbolicMonomial> gens);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<SymbolicMonomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  MonomialIdeal at(std::uint64_t q) const;

  friend bool operator==(const SymbolicIdeal&, const SymbolicIdeal&) = default;

private:
  std::size_t nvars_;
  std::vector<SymbolicMonomial> gens_;
};

SymbolicIdeal intersect(const SymbolicIdeal& a, const SymbolicIdeal& b);

std::string to_string(const SymbolicIdeal& ideal);

}  // namespace frobloc
