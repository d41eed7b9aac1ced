#pragma once

#include <cstdint>
#include <vector>

#include "ideal.hpp"

namespace frobloc {

inline constexpr std::uint64_t kDefaultMaxGenerators = 100000;

/// Degree-wise generation data of F = ⊕ (I^[p^e] : I) f^e, computed at concrete q only.
struct GenerationProfile {
  MonomialIdeal ideal;
  std::uint32_t p = 2;
  std::uint32_t max_e = 0;
  std::vector<bool> needs_new;            // index e - 1
  std::vector<MonomialIdeal> f_ideals;    // F_e, index e - 1
  std::vector<MonomialIdeal> l_ideals;    // L_e, index e - 1

  // No new generators needed in degrees 2..max_e. Evidence, not proof.
  bool finitely_generated_consistent() const;
};

// F_e = (I^[p^e] : I).
MonomialIdeal compute_F(const MonomialIdeal& ideal, std::uint32_t p, std::uint32_t e);

// L_e = sum over ordered compositions e = e_1 + ... + e_s with 1 <= e_i < e of
// F_{e_1} F_{e_2}^[p^{e_1}] ... F_{e_s}^[p^{e_1 + ... + e_{s-1}}].
// `f` holds F_1 .. F_{e-1} at least. Throws Error(ResourceLimit) past max_generators.
MonomialIdeal compute_L(const std::vector<MonomialIdeal>& f, std::uint32_t p, std::uint32_t e,
                        std::uint64_t max_generators = kDefaultMaxGenerators);

// Ordered compositions of e into parts in [1, e - 1].
std::vector<std::vector<std::uint32_t>> compositions_below(std::uint32_t e);

GenerationProfile classify_up_to(const MonomialIdeal& ideal, std::uint32_t p, std::uint32_t max_e = 3,
                                 std::uint64_t max_generators = kDefaultMaxGenerators);

}  // namespace frobloc
