#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace frobloc {

using Exponent = std::uint32_t;

/// A monomial x_1^{c_1} ... x_n^{c_n} stored as its exponent vector.
/// Ordering is lexicographic on the exponent vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

  static Monomial unit(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_square_free() const noexcept;

  // Bitmask of variables with a nonzero exponent (variable i -> bit i).
  std::uint64_t support() const noexcept;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

// All binary operations throw Error(DimensionMismatch) on differing nvars.
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);

// lcm(a, b) / b, the generator of ((a) : b).
Monomial colon(const Monomial& a, const Monomial& b);

// Componentwise scaling by q; throws Error(Overflow) if any exponent leaves Exponent.
Monomial scale(const Monomial& m, std::uint64_t q);

// "x1*x2^2" style text; the unit monomial renders as "1".
std::string to_string(const Monomial& m);

}  // namespace frobloc
