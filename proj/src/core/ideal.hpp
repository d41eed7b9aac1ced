#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace frobloc {

bool is_prime(std::uint64_t p) noexcept;

/// q = p^e with p prime and e >= 1.
class FrobeniusExponent {
public:
  // Throws Error(InvalidArgument) for non-prime p or e == 0, Error(Overflow) when p^e
  // does not fit in an Exponent.
  FrobeniusExponent(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }

private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
};

/// A monomial ideal held by its minimal generators in descending lexicographic order.
/// The zero ideal has no generators; the unit ideal is generated by the unit monomial.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  // Minimalizes; throws Error(DimensionMismatch) if a generator has the wrong nvars.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial::unit(nvars)}); }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const;

  // Bitmask of variables that occur in some generator.
  std::uint64_t support() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

// Antichain under divisibility generating the same ideal, in descending lexicographic order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, const FrobeniusExponent& q);
// Raw exponent scaling for callers that already hold a checked power of p.
MonomialIdeal scale_generators(const MonomialIdeal& ideal, std::uint64_t q);

// (J : m), generated by lcm(g, m) / m over generators g of J.
MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m);
// (J : I) = intersection of (J : g) over generators g of I. Throws for zero I.
MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i);

// Generators joined by ", "; the zero ideal renders as "0".
std::string to_string(const MonomialIdeal& ideal);

}  // namespace frobloc
