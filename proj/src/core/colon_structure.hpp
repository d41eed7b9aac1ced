#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ideal.hpp"
#include "symbolic.hpp"

namespace frobloc {

/// A square-free monomial ideal that is neither zero nor the unit ideal.
class SquareFreeIdeal {
public:
  // Throws Error(SquareFreeViolation) or Error(DegenerateIdeal).
  explicit SquareFreeIdeal(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  std::size_t nvars() const noexcept { return ideal_.nvars(); }

private:
  MonomialIdeal ideal_;
};

SquareFreeIdeal validate_square_free(const MonomialIdeal& ideal);

// beta_i = 1 iff x_i occurs in some generator.
std::vector<std::uint8_t> compute_beta(const MonomialIdeal& ideal);

// (I^[q] : I) for q = p^e, valid for every e >= 1. Throws for non-prime p.
SymbolicIdeal colon_symbolic(const SquareFreeIdeal& ideal, std::uint32_t p);

enum class GenerationClass { PrincipallyGenerated, InfinitelyGenerated, Undetermined };

/// (I^[q] : I) = I^[q] + J_q + ((x^beta)^(q-1)).
struct ColonDecomposition {
  MonomialIdeal base_ideal;
  std::uint32_t p = 2;
  SymbolicIdeal frobenius_part;  // q-scaled generators of I
  SymbolicIdeal j_part;          // residual minimal generators, possibly empty
  std::vector<std::uint8_t> beta;

  // (x^beta)^(q-1) as a symbolic monomial.
  SymbolicMonomial socle() const;
};

/// Concrete parts of a decomposition at q = p^e.
struct InstantiatedDecomposition {
  MonomialIdeal frobenius_part;
  MonomialIdeal j_part;
  MonomialIdeal socle;

  MonomialIdeal combined() const;
};

ColonDecomposition decompose(const SquareFreeIdeal& ideal, std::uint32_t p);

InstantiatedDecomposition instantiate(const ColonDecomposition& d, std::uint32_t e);
MonomialIdeal instantiate(const SymbolicIdeal& ideal, std::uint32_t p, std::uint32_t e);

struct GlobalClassification {
  GenerationClass generation;
  // (x^beta)^(p-1), present only for the principal case.
  std::optional<Monomial> witness;
};

GlobalClassification classify_global(const ColonDecomposition& d);

// Ann((I^[p] + J_p) / I^[p]) = (I^[p] : J_p); the unit ideal when J_p is empty.
MonomialIdeal compute_u_prime(const ColonDecomposition& d);

}  // namespace frobloc
