#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colon_structure.hpp"

namespace frobloc {

using VarSet = std::uint32_t;

// Largest variable count for which the 2^n strata are enumerated.
inline constexpr std::size_t kMaxLocusVars = 20;

/// Primes containing exactly the variables in `in_prime` (bit i <-> x_{i+1}).
struct Stratum {
  std::size_t nvars = 0;
  VarSet in_prime = 0;

  VarSet inverted() const noexcept { return ~in_prime & full_mask(nvars); }
  static VarSet full_mask(std::size_t nvars) noexcept {
    return nvars >= 32 ? ~VarSet{0} : (VarSet{1} << nvars) - 1;
  }

  friend auto operator<=>(const Stratum&, const Stratum&) = default;
};

std::string to_string(const Stratum& s);  // "{1,3}"

/// A set of strata over n variables, indexed by the in-prime bitmask.
class StrataSet {
public:
  explicit StrataSet(std::size_t nvars);
  static StrataSet all(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t universe_size() const noexcept { return bits_.size(); }
  bool contains(VarSet z) const { return bits_.at(z); }
  void insert(VarSet z) { bits_.at(z) = true; }
  void erase(VarSet z) { bits_.at(z) = false; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<VarSet> members() const;

  StrataSet operator&(const StrataSet& o) const;
  StrataSet operator|(const StrataSet& o) const;
  StrataSet operator-(const StrataSet& o) const;
  friend bool operator==(const StrataSet&, const StrataSet&) = default;

private:
  std::size_t nvars_;
  std::vector<bool> bits_;
};

enum class LocusMode { Default, Strict };
enum class Ambient { VI, Full };
enum class Certificate { DirectTheorem, ComplementPattern, Transfer, None };
enum class Openness { Open, NotOpen, Unknown };

struct StratumVerdict {
  Stratum stratum;
  bool in_support = true;  // false only for strata outside V(I) in full-spectrum reports
  GenerationClass generation = GenerationClass::Undetermined;
  Certificate certificate = Certificate::None;
  std::optional<ColonDecomposition> localized;
};

// Variables in W set to 1, result minimalized.
MonomialIdeal substitute(const MonomialIdeal& ideal, VarSet inverted);

// Every generator of I meets Z, i.e. the stratum lies in V(I).
bool is_admissible(const MonomialIdeal& ideal, VarSet in_prime);

std::vector<Stratum> enumerate_strata(const MonomialIdeal& ideal, bool restrict_to_v_of_i);

// Throws Error(InadmissibleStratum) when substitution yields the unit ideal.
StratumVerdict classify_stratum(const SquareFreeIdeal& ideal, std::uint32_t p, const Stratum& s,
                                LocusMode mode = LocusMode::Default);

// `inside` is open in `domain` iff its complement is upward-closed under Z-inclusion.
// Unknown when assigning the undetermined strata can produce either verdict.
Openness is_open(const StrataSet& inside, const StrataSet& undetermined, const StrataSet& domain);
bool is_upward_closed(const StrataSet& set, const StrataSet& domain);

// Canonical D(.)/V(.) rendering of a stratum set relative to its domain.
std::string render_expression(const StrataSet& set, const StrataSet& domain, Ambient ambient);

// Parses unions (| or ∪) and intersections (& or ∩) of D(monomial), V(x_i, ...), V(I)
// and Spec into a stratum set, intersected with `domain`. Throws ParseError.
StrataSet parse_strata_expression(std::string_view text, const MonomialIdeal& ideal, const StrataSet& domain);

struct LocusOptions {
  LocusMode mode = LocusMode::Default;
  Ambient ambient = Ambient::VI;
};

struct LocusReport {
  MonomialIdeal ideal;
  std::uint32_t p;
  LocusOptions options;
  std::vector<StratumVerdict> verdicts;  // ascending by in-prime bitmask
  StrataSet domain;
  StrataSet u_strata;
  StrataSet complement_strata;
  StrataSet undetermined_strata;
  Openness openness;
  std::string u_expression;
  std::string complement_expression;
  MonomialIdeal u_prime_annihilator;
  StrataSet u_prime_strata;
  std::string u_prime_expression;
  std::vector<std::string> notes;
};

LocusReport build_locus(const SquareFreeIdeal& ideal, std::uint32_t p, const LocusOptions& options = {});

// Compares the derived U against a written expression; a mismatch is appended to notes.
bool check_u_expression(LocusReport& report, std::string_view expected);

}  // namespace frobloc
