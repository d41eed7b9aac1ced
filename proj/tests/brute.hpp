#pragma once

// Reference arithmetic on plain exponent vectors. Nothing here calls into the
// library's ideal operations, so results can be compared against them.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ideal.hpp"

namespace brute {

using Vec = std::vector<std::uint32_t>;
using Gens = std::vector<Vec>;

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const Gens& gens, const Vec& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Vec& g) { return divides(g, m); });
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Quadratic minimal-element filter, deduplicated, ascending lexicographic.
inline Gens minimal(const Gens& gens) {
  std::set<Vec> uniq(gens.begin(), gens.end());
  Gens out;
  for (const auto& g : uniq) {
    bool dominated = false;
    for (const auto& h : uniq)
      if (h != g && divides(h, g)) dominated = true;
    if (!dominated) out.push_back(g);
  }
  return out;
}

// Calls f on every exponent vector in the box [0, bound]^n.
template <class F>
void for_box(std::size_t n, std::uint32_t bound, F&& f) {
  Vec v(n, 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

// (J : I) by testing m*g in J for every m in a box large enough to hold all
// minimal generators (no generator of the colon needs an exponent above max(J)).
inline Gens colon(const Gens& j, const Gens& i, std::size_t n) {
  std::uint32_t bound = 0;
  for (const auto& g : j)
    for (auto x : g) bound = std::max(bound, x);
  Gens hits;
  for_box(n, bound, [&](const Vec& m) {
    for (const auto& g : i)
      if (!member(j, add(m, g))) return;
    hits.push_back(m);
  });
  return minimal(hits);
}

inline Gens scale(const Gens& gens, std::uint32_t q) {
  Gens out = gens;
  for (auto& g : out)
    for (auto& x : g) x *= q;
  return out;
}

inline Gens gens_of(const frobloc::MonomialIdeal& ideal) {
  Gens out;
  for (const auto& g : ideal.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  std::sort(out.begin(), out.end());
  return out;
}

inline frobloc::MonomialIdeal ideal_of(std::size_t n, const Gens& gens) {
  std::vector<frobloc::Monomial> ms;
  for (const auto& g : gens) ms.emplace_back(std::vector<frobloc::Exponent>(g.begin(), g.end()));
  return frobloc::MonomialIdeal(n, ms);
}

// Square-free ideals on n variables given by antichains of nonempty supports,
// every one of them (no symmetry reduction).
inline std::vector<Gens> all_square_free(std::size_t n) {
  const std::uint32_t subsets = (1u << n) - 1;  // nonempty supports 1..subsets
  std::vector<Gens> out;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); ++family) {
    std::vector<std::uint32_t> supp;
    for (std::uint32_t s = 1; s <= subsets; ++s)
      if ((family >> (s - 1)) & 1) supp.push_back(s);
    bool antichain = true;
    for (auto a : supp)
      for (auto b : supp)
        if (a != b && (a & b) == a) antichain = false;
    if (!antichain) continue;
    Gens g;
    for (auto s : supp) {
      Vec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = (s >> k) & 1;
      g.push_back(v);
    }
    out.push_back(g);
  }
  return out;
}

inline Gens random_square_free(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> supp(1, (1u << n) - 1);
  std::uniform_int_distribution<int> count(1, 3);
  Gens g;
  for (int k = count(rng); k > 0; --k) {
    auto s = supp(rng);
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (s >> i) & 1;
    g.push_back(v);
  }
  return minimal(g);
}

inline Vec random_monomial(std::mt19937& rng, std::size_t n, std::uint32_t max_degree) {
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  Vec v(n, 0);
  for (auto d = deg(rng); d > 0; --d) ++v[var(rng)];
  return v;
}

}  // namespace brute
