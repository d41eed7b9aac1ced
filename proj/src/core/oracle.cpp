#include "oracle.hpp"

#include "error.hpp"

namespace frobloc {

namespace {

void guard(std::uint64_t count, std::uint64_t limit) {
  if (count > limit)
    throw Error(Errc::ResourceLimit, "intermediate generator count " + std::to_string(count) + " exceeds the bound " +
                                         std::to_string(limit));
}

void extend(std::vector<std::uint32_t>& prefix, std::uint32_t remaining, std::uint32_t bound,
            std::vector<std::vector<std::uint32_t>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t part = 1; part <= remaining && part < bound; ++part) {
    prefix.push_back(part);
    extend(prefix, remaining - part, bound, out);
    prefix.pop_back();
  }
}

}  // namespace

bool GenerationProfile::finitely_generated_consistent() const {
  for (std::size_t e = 2; e <= needs_new.size(); ++e)
    if (needs_new[e - 1]) return false;
  return true;
}

MonomialIdeal compute_F(const MonomialIdeal& ideal, std::uint32_t p, std::uint32_t e) {
  return colon(frobenius_power(ideal, FrobeniusExponent(p, e)), ideal);
}

std::vector<std::vector<std::uint32_t>> compositions_below(std::uint32_t e) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> prefix;
  extend(prefix, e, e, out);
  return out;
}

MonomialIdeal compute_L(const std::vector<MonomialIdeal>& f, std::uint32_t p, std::uint32_t e,
                        std::uint64_t max_generators) {
  if (f.empty()) throw Error(Errc::InvalidArgument, "L_e needs F_1");
  if (f.size() + 1 < e) throw Error(Errc::InvalidArgument, "L_" + std::to_string(e) + " needs F_1 .. F_" + std::to_string(e - 1));
  const std::size_t n = f.front().nvars();
  MonomialIdeal sum = MonomialIdeal::zero(n);
  for (const auto& parts : compositions_below(e)) {
    MonomialIdeal product = f[parts.front() - 1];
    std::uint32_t shift = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
      const MonomialIdeal twisted = frobenius_power(f[parts[k] - 1], FrobeniusExponent(p, shift));
      guard(std::uint64_t{product.size()} * twisted.size(), max_generators);
      product = ideal_product(product, twisted);
      shift += parts[k];
    }
    sum = ideal_sum(sum, product);
    guard(sum.size(), max_generators);
  }
  return sum;
}

GenerationProfile classify_up_to(const MonomialIdeal& ideal, std::uint32_t p, std::uint32_t max_e,
                                 std::uint64_t max_generators) {
  if (max_e == 0) throw Error(Errc::InvalidArgument, "max_e must be at least 1");
  if (ideal.is_zero()) throw Error(Errc::DegenerateIdeal, "the zero ideal has no Frobenius algebra");
  GenerationProfile profile{ideal, p, max_e, {}, {}, {}};
  for (std::uint32_t e = 1; e <= max_e; ++e) {
    MonomialIdeal f = compute_F(ideal, p, e);
    guard(f.size(), max_generators);
    profile.f_ideals.push_back(std::move(f));
    profile.l_ideals.push_back(e == 1 ? MonomialIdeal::zero(ideal.nvars()) : compute_L(profile.f_ideals, p, e, max_generators));
    const MonomialIdeal reachable =
        ideal_sum(profile.l_ideals.back(), frobenius_power(ideal, FrobeniusExponent(p, e)));
    profile.needs_new.push_back(profile.f_ideals.back() != reachable);
  }
  return profile;
}

}  // namespace frobloc
