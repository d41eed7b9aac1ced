#include <doctest.h>

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace frobloc;
using fixtures::ideal;
using fixtures::square_free;

namespace {

bool subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const Monomial& g) { return b.contains(g); });
}

std::vector<bool> profile(const char* text, std::uint32_t p = 2) { return classify_up_to(ideal(text), p, 3).needs_new; }

}  // namespace

TEST_CASE("compute_F") {
  CHECK(compute_F(ideal("x1*x2, x2*x3"), 2, 1) == ideal("x1^2*x2, x2*x3^2, x1*x2*x3"));
  CHECK(compute_F(ideal("x1*x2"), 3, 2) == ideal("x1^8*x2^8"));
  auto f = compute_F(ideal("x1, x2"), 2, 2);
  CHECK(f == ideal("x1^4, x2^4, x1^3*x2^3"));
  CHECK(brute::gens_of(f) == brute::colon({{4, 0}, {0, 4}}, {{1, 0}, {0, 1}}, 2));
}

TEST_CASE("compositions") {
  CHECK(compositions_below(1).empty());
  CHECK(compositions_below(2) == std::vector<std::vector<std::uint32_t>>{{1, 1}});
  auto three = compositions_below(3);
  std::sort(three.begin(), three.end());
  CHECK(three == std::vector<std::vector<std::uint32_t>>{{1, 1, 1}, {1, 2}, {2, 1}});
  CHECK(compositions_below(5).size() == 15);
}

TEST_CASE("compute_L") {
  auto i = ideal("x1*x2, x2*x3");
  std::vector<MonomialIdeal> f{compute_F(i, 2, 1), compute_F(i, 2, 2)};
  CHECK(compute_L(f, 2, 1).is_zero());
  CHECK(compute_L(f, 2, 2) == ideal_product(f[0], scale_generators(f[0], 2)));
  auto with_frob = ideal_sum(compute_L(f, 2, 2), scale_generators(i, 4));
  CHECK_FALSE(with_frob.contains(Monomial{4, 3, 0}));
  CHECK(f[1].contains(Monomial{4, 3, 0}));
}

TEST_CASE("L_3 does not depend on composition order") {
  auto i = ideal("x1*x2*x3, x3*x4");
  std::vector<MonomialIdeal> f;
  for (std::uint32_t e = 1; e <= 2; ++e) f.push_back(compute_F(i, 2, e));
  auto comps = compositions_below(3);
  MonomialIdeal forward = MonomialIdeal::zero(4), backward = MonomialIdeal::zero(4);
  auto term = [&](const std::vector<std::uint32_t>& c) {
    MonomialIdeal t = MonomialIdeal::unit(4);
    std::uint32_t shift = 0;
    for (auto part : c) {
      std::uint64_t q = 1;
      for (std::uint32_t k = 0; k < shift; ++k) q *= 2;
      t = ideal_product(t, scale_generators(f[part - 1], q));
      shift += part;
    }
    return t;
  };
  for (const auto& c : comps) forward = ideal_sum(forward, term(c));
  for (auto it = comps.rbegin(); it != comps.rend(); ++it) backward = ideal_sum(backward, term(*it));
  CHECK(forward == backward);
  CHECK(forward == compute_L(f, 2, 3));
}

TEST_CASE("generation profiles") {
  CHECK(profile("x1*x2, x2*x3") == std::vector<bool>{true, true, true});
  CHECK(profile("x1*x2") == std::vector<bool>{true, false, false});
  CHECK(profile("x1, x2") == std::vector<bool>{true, false, false});
  CHECK(profile("x1*x2, x2*x3", 3) == std::vector<bool>{true, true, true});
  CHECK(classify_up_to(ideal("x1*x2"), 2, 3).finitely_generated_consistent());
}

TEST_CASE("resource guard") {
  try {
    classify_up_to(ideal("x1*x2*x3, x3*x4, x4*x5"), 2, 3, 10);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ResourceLimit);
  }
}

TEST_CASE("L_e sits inside F_e") {
  std::mt19937 rng(3);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 2 + round % 3;
    auto i = brute::ideal_of(n, brute::random_square_free(rng, n));
    auto prof = classify_up_to(i, 2, 3);
    for (std::size_t e = 0; e < prof.max_e; ++e) CHECK(subset(prof.l_ideals[e], prof.f_ideals[e]));
  }
}

TEST_CASE("profiles follow the j-part on all ideals up to three variables") {
  std::size_t principal = 0, infinite = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& gens : brute::all_square_free(n)) {
      auto i = validate_square_free(brute::ideal_of(n, gens));
      const bool empty_j = decompose(i, 2).j_part.empty();
      auto needs = classify_up_to(i.ideal(), 2, 3).needs_new;
      if (empty_j) {
        CHECK(needs == std::vector<bool>{true, false, false});
        ++principal;
      } else {
        CHECK(needs == std::vector<bool>{true, true, true});
        ++infinite;
      }
    }
  CHECK(principal > 0);
  CHECK(infinite > 0);
}

TEST_CASE("stratum classifier matches the oracle up to three variables") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& gens : brute::all_square_free(n)) {
      auto i = validate_square_free(brute::ideal_of(n, gens));
      CHECK(cross_check(i, 2).empty());
    }
}
