#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "colon_structure.hpp"
#include "locus.hpp"
#include "oracle.hpp"

namespace frobloc {

inline constexpr std::size_t kMaxEnumerateVars = 5;

/// One square-free ideal per orbit of the symmetric group acting on variables.
struct CanonicalIdeal {
  SquareFreeIdeal ideal;
  std::uint64_t orbit_size;
};

// Every square-free ideal on n variables other than zero and unit, up to permutation.
// Representatives are the lexicographically least sorted support list in their orbit.
std::vector<CanonicalIdeal> canonical_square_free_ideals(std::size_t nvars);

struct StratumDisagreement {
  Stratum stratum;
  GenerationClass classifier;
  bool oracle_consistent;
};

// Compares classify_stratum with classify_up_to on the substituted ideal for every
// admissible stratum: principal <=> no new generators in degrees 2..max_e.
std::vector<StratumDisagreement> cross_check(const SquareFreeIdeal& ideal, std::uint32_t p, std::uint32_t max_e = 3,
                                             std::uint64_t max_generators = kDefaultMaxGenerators);

struct EnumerationEntry {
  const CanonicalIdeal* ideal;
  GenerationClass generation;
  Openness openness;
  std::size_t disagreements;
};

struct EnumerationSummary {
  std::size_t representatives = 0;
  std::uint64_t ideals = 0;  // sum of orbit sizes
  std::size_t principal = 0;
  std::size_t infinite = 0;
  std::uint64_t principal_orbits = 0;
  std::uint64_t infinite_orbits = 0;
  std::size_t open = 0;
  std::size_t not_open = 0;
  std::size_t unknown = 0;
  std::size_t disagreements = 0;
};

struct EnumerationOptions {
  bool check = false;
  std::uint32_t max_e = 3;
  std::uint64_t max_generators = kDefaultMaxGenerators;
  LocusMode mode = LocusMode::Default;
};

EnumerationSummary enumerate_ideals(std::size_t nvars, std::uint32_t p, const EnumerationOptions& options,
                                    const std::function<void(const EnumerationEntry&)>& visit = {});

}  // namespace frobloc
