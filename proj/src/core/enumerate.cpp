#include "enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace frobloc {

namespace {

using Support = std::vector<VarSet>;

VarSet permute(VarSet mask, const std::vector<std::size_t>& perm) {
  VarSet out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((mask >> i) & 1u) out |= VarSet{1} << perm[i];
  return out;
}

// All antichains of nonempty subsets of {0..n-1}, each as an ascending mask list.
void antichains(std::size_t n, VarSet next, Support& current, std::vector<Support>& out) {
  if (!current.empty()) out.push_back(current);
  const VarSet limit = VarSet{1} << n;
  for (VarSet m = next; m < limit; ++m) {
    const bool comparable = std::any_of(current.begin(), current.end(),
                                        [&](VarSet c) { return (c & m) == c || (c & m) == m; });
    if (comparable) continue;
    current.push_back(m);
    antichains(n, m + 1, current, out);
    current.pop_back();
  }
}

MonomialIdeal from_support(const Support& support, std::size_t n) {
  std::vector<Monomial> gens;
  for (VarSet m : support) {
    std::vector<Exponent> exps(n, 0);
    for (std::size_t i = 0; i < n; ++i) exps[i] = (m >> i) & 1u;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace

std::vector<CanonicalIdeal> canonical_square_free_ideals(std::size_t nvars) {
  if (nvars == 0 || nvars > kMaxEnumerateVars)
    throw Error(Errc::InvalidArgument, "enumeration supports 1 to " + std::to_string(kMaxEnumerateVars) + " variables");

  std::vector<Support> all;
  Support current;
  antichains(nvars, 1, current, all);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<CanonicalIdeal> out;
  for (const auto& support : all) {
    std::set<Support> orbit;
    for (const auto& p : perms) {
      Support image;
      for (VarSet m : support) image.push_back(permute(m, p));
      std::sort(image.begin(), image.end());
      orbit.insert(std::move(image));
    }
    if (*orbit.begin() != support) continue;
    out.push_back({SquareFreeIdeal(from_support(support, nvars)), orbit.size()});
  }
  return out;
}

std::vector<StratumDisagreement> cross_check(const SquareFreeIdeal& ideal, std::uint32_t p, std::uint32_t max_e,
                                             std::uint64_t max_generators) {
  std::vector<StratumDisagreement> out;
  for (const auto& s : enumerate_strata(ideal.ideal(), true)) {
    const auto verdict = classify_stratum(ideal, p, s);
    const auto profile = classify_up_to(substitute(ideal.ideal(), s.inverted()), p, max_e, max_generators);
    const bool consistent = profile.finitely_generated_consistent();
    const bool principal = verdict.generation == GenerationClass::PrincipallyGenerated;
    if (principal != consistent || verdict.generation == GenerationClass::Undetermined)
      out.push_back({s, verdict.generation, consistent});
  }
  return out;
}

EnumerationSummary enumerate_ideals(std::size_t nvars, std::uint32_t p, const EnumerationOptions& options,
                                    const std::function<void(const EnumerationEntry&)>& visit) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  const auto reps = canonical_square_free_ideals(nvars);
  EnumerationSummary sum;
  for (const auto& rep : reps) {
    const auto cls = classify_global(decompose(rep.ideal, p)).generation;
    const auto report = build_locus(rep.ideal, p, {options.mode, Ambient::VI});
    std::size_t bad = 0;
    if (options.check) bad = cross_check(rep.ideal, p, options.max_e, options.max_generators).size();

    ++sum.representatives;
    sum.ideals += rep.orbit_size;
    if (cls == GenerationClass::PrincipallyGenerated) {
      ++sum.principal;
      sum.principal_orbits += rep.orbit_size;
    } else {
      ++sum.infinite;
      sum.infinite_orbits += rep.orbit_size;
    }
    switch (report.openness) {
      case Openness::Open: ++sum.open; break;
      case Openness::NotOpen: ++sum.not_open; break;
      case Openness::Unknown: ++sum.unknown; break;
    }
    sum.disagreements += bad;
    if (visit) visit({&rep, cls, report.openness, bad});
  }
  return sum;
}

}  // namespace frobloc
