#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "locus.hpp"

using namespace frobloc;
using fixtures::ideal;
using fixtures::square_free;

namespace {

// Bitmask from 1-based variable indices.
VarSet vars(std::initializer_list<int> idx) {
  VarSet z = 0;
  for (int i : idx) z |= VarSet{1} << (i - 1);
  return z;
}

std::set<VarSet> members(const StrataSet& s) {
  auto m = s.members();
  return {m.begin(), m.end()};
}

// Open in the domain iff no stratum outside the set specializes to one inside it.
bool brute_open(const StrataSet& inside, const StrataSet& domain) {
  for (VarSet a = 0; a < domain.universe_size(); ++a)
    for (VarSet b = 0; b < domain.universe_size(); ++b)
      if (domain.contains(a) && domain.contains(b) && (a & b) == a && !inside.contains(a) && inside.contains(b))
        return false;
  return true;
}

}  // namespace

TEST_CASE("substitute") {
  CHECK(substitute(ideal("x1*x2, x2*x3"), vars({1, 3})) == ideal("x2", 3));
  CHECK(substitute(ideal("x1*x2*x3, x3*x4"), vars({4})) == ideal("x3", 4));
  CHECK(substitute(ideal("x1*x2, x2*x3"), 0) == ideal("x1*x2, x2*x3"));
  CHECK(substitute(ideal("x1*x2, x2*x3"), vars({1, 2})).is_unit());
}

TEST_CASE("enumerate_strata") {
  auto restricted = enumerate_strata(ideal("x1*x2, x2*x3"), true);
  std::set<VarSet> zs;
  for (const auto& s : restricted) zs.insert(s.in_prime);
  CHECK(zs == std::set<VarSet>{vars({2}), vars({1, 2}), vars({2, 3}), vars({1, 3}), vars({1, 2, 3})});
  CHECK(enumerate_strata(ideal("x1*x2, x2*x3"), false).size() == 8);
  for (const auto& s : enumerate_strata(ideal("x1", 4), true)) CHECK((s.in_prime & 1u) == 1u);
  CHECK(enumerate_strata(ideal("x1", 4), true).size() == 8);
}

TEST_CASE("classify_stratum") {
  auto i = square_free("x1*x2, x2*x3");
  auto top = classify_stratum(i, 2, Stratum{3, vars({1, 2, 3})});
  CHECK(top.generation == GenerationClass::InfinitelyGenerated);
  CHECK(top.certificate == Certificate::ComplementPattern);
  auto x2 = classify_stratum(i, 2, Stratum{3, vars({2})});
  CHECK(x2.generation == GenerationClass::PrincipallyGenerated);
  CHECK(x2.certificate == Certificate::DirectTheorem);
  auto ex1 = classify_stratum(square_free("x1*x2*x3, x3*x4"), 2, Stratum{4, vars({1, 3, 4})});
  CHECK(ex1.generation == GenerationClass::InfinitelyGenerated);
  REQUIRE(ex1.localized.has_value());
  CHECK(ex1.localized->base_ideal == ideal("x1*x3, x3*x4"));
  CHECK_THROWS_AS(classify_stratum(i, 2, Stratum{3, vars({1})}), Error);
  try {
    classify_stratum(i, 2, Stratum{3, vars({3})});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InadmissibleStratum);
  }
}

TEST_CASE("full-support stratum matches the global class") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& gens : brute::all_square_free(n)) {
      auto i = validate_square_free(brute::ideal_of(n, gens));
      const auto z = static_cast<VarSet>(i.ideal().support());
      CHECK(classify_stratum(i, 2, Stratum{n, z}).generation == classify_global(decompose(i, 2)).generation);
    }
}

TEST_CASE("locus of (x1x2, x2x3)") {
  auto r = build_locus(square_free("x1*x2, x2*x3"), 2);
  CHECK(members(r.complement_strata) == std::set<VarSet>{vars({1, 2, 3})});
  CHECK(members(r.u_strata) == std::set<VarSet>{vars({2}), vars({1, 2}), vars({2, 3}), vars({1, 3})});
  CHECK(r.openness == Openness::Open);
  CHECK(r.complement_expression == "V(x1,x2,x3)");
  CHECK(r.u_prime_annihilator == ideal("x2", 3));
  CHECK(r.u_prime_expression == "D(x2) ∩ V(I)");
  CHECK(r.u_prime_strata.contains(vars({1, 2})) == false);
  CHECK(r.u_strata.contains(vars({1, 3})));
  CHECK(r.u_prime_strata.contains(vars({1, 3})));
  CHECK_FALSE(r.u_prime_strata.contains(vars({2})));
  CHECK(r.u_strata.contains(vars({2})));
  CHECK(check_u_expression(r, "(D(x1) ∪ D(x2) ∪ D(x3)) ∩ V(I)"));
  CHECK(r.notes.empty());
}

TEST_CASE("U' strata all classify as finitely generated") {
  auto i = square_free("x1*x2, x2*x3");
  auto r = build_locus(i, 2);
  for (VarSet z : r.u_prime_strata.members())
    CHECK(classify_stratum(i, 2, Stratum{3, z}).generation == GenerationClass::PrincipallyGenerated);
}

TEST_CASE("locus of (x1x2x3, x3x4)") {
  auto r = build_locus(square_free("x1*x2*x3, x3*x4"), 2);
  CHECK(members(r.complement_strata) == std::set<VarSet>{vars({1, 3, 4}), vars({2, 3, 4}), vars({1, 2, 3, 4})});
  CHECK(r.openness == Openness::Open);
  CHECK(r.complement_expression == "V(x1,x3,x4) ∪ V(x2,x3,x4)");
  CHECK_FALSE(check_u_expression(r, "D(x1x3x4)"));
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("D(x1x3x4)") != std::string::npos);
}

TEST_CASE("principal ideal: everything is in U") {
  for (std::uint32_t p : {2u, 3u}) {
    auto r = build_locus(square_free("x1"), p);
    CHECK(r.complement_strata.empty());
    CHECK(r.u_strata == r.domain);
    CHECK(r.openness == Openness::Open);
  }
}

TEST_CASE("full ambient keeps strata outside V(I)") {
  auto r = build_locus(square_free("x1*x2*x3, x3*x4"), 2, {LocusMode::Default, Ambient::Full});
  CHECK(r.domain.count() == 16);
  CHECK(r.openness == Openness::NotOpen);
  std::size_t outside = 0;
  for (const auto& v : r.verdicts) outside += v.in_support ? 0 : 1;
  CHECK(outside == 16 - enumerate_strata(ideal("x1*x2*x3, x3*x4"), true).size());
}

TEST_CASE("is_open simple cases") {
  auto all = StrataSet::all(3);
  StrataSet none(3);
  CHECK(is_open(all, none, all) == Openness::Open);
  StrataSet closed_point(3);
  closed_point.insert(vars({1, 2, 3}));
  CHECK(is_open(all - closed_point, none, all) == Openness::Open);
  CHECK(is_open(closed_point, none, all) == Openness::NotOpen);
}

TEST_CASE("is_open agrees with brute force on every family over three variables") {
  auto all = StrataSet::all(3);
  StrataSet none(3);
  for (unsigned family = 0; family < 256; ++family) {
    StrataSet s(3);
    for (VarSet z = 0; z < 8; ++z)
      if ((family >> z) & 1) s.insert(z);
    const bool expected = brute_open(s, all);
    CHECK(is_open(s, none, all) == (expected ? Openness::Open : Openness::NotOpen));
  }
}

TEST_CASE("is_open reports Unknown exactly when the undetermined strata can flip it") {
  auto all = StrataSet::all(3);
  for (unsigned family = 0; family < 256; family += 3) {
    for (unsigned und = 1; und < 256; und += 37) {
      StrataSet in(3), u(3);
      for (VarSet z = 0; z < 8; ++z) {
        if ((und >> z) & 1)
          u.insert(z);
        else if ((family >> z) & 1)
          in.insert(z);
      }
      const auto uz = u.members();
      bool can_open = false, can_close = false;
      for (unsigned pick = 0; pick < (1u << uz.size()); ++pick) {
        StrataSet t = in;
        for (std::size_t k = 0; k < uz.size(); ++k)
          if ((pick >> k) & 1) t.insert(uz[k]);
        (brute_open(t, all) ? can_open : can_close) = true;
      }
      const auto got = is_open(in, u, all);
      if (can_open && can_close)
        CHECK(got == Openness::Unknown);
      else
        CHECK(got == (can_open ? Openness::Open : Openness::NotOpen));
    }
  }
}

TEST_CASE("infinite strata are upward closed on the fixtures") {
  for (const char* text : {"x1*x2, x2*x3", "x1*x2*x3, x3*x4"}) {
    auto r = build_locus(square_free(text), 2);
    CHECK(is_upward_closed(r.complement_strata, r.domain));
  }
}

TEST_CASE("substitution commutes with the frobenius colon") {
  for (const char* text : fixtures::named()) {
    auto i = ideal(text);
    const auto n = i.nvars();
    for (std::uint32_t p : {2u, 3u})
      for (std::uint32_t e : {1u, 2u}) {
        FrobeniusExponent q(p, e);
        auto full = colon(frobenius_power(i, q), i);
        for (VarSet w = 0; w < (VarSet{1} << n); ++w) {
          auto s = substitute(i, w);
          CHECK(substitute(full, w) == colon(frobenius_power(s, q), s));
        }
      }
  }
}

TEST_CASE("expression parser") {
  auto i = ideal("x1*x2, x2*x3");
  StrataSet domain(3);
  for (const auto& s : enumerate_strata(i, true)) domain.insert(s.in_prime);
  auto all = StrataSet::all(3);
  CHECK(parse_strata_expression("V(I)", i, all) == domain);
  CHECK(parse_strata_expression("Spec", i, domain) == domain);
  CHECK(members(parse_strata_expression("V(x1,x2,x3)", i, domain)) == std::set<VarSet>{7});
  CHECK(parse_strata_expression("D(x1) | D(x2) | D(x3)", i, domain) ==
        parse_strata_expression("(D(x1) ∪ D(x2) ∪ D(x3)) ∩ V(I)", i, all));
  CHECK(parse_strata_expression("D(x1x3) & V((x2))", i, domain) == parse_strata_expression("D(x1*x3) ∩ v(x2)", i, domain));
  try {
    parse_strata_expression("D(x9)", i, domain);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(parse_strata_expression("D(x1) ∪", i, domain), ParseError);
}

TEST_CASE("rendered expressions parse back to the same strata") {
  for (const char* text : fixtures::named())
    for (auto ambient : {Ambient::VI, Ambient::Full}) {
      auto r = build_locus(square_free(text), 2, {LocusMode::Default, ambient});
      CHECK(parse_strata_expression(r.u_expression, r.ideal, r.domain) == r.u_strata);
      CHECK(parse_strata_expression(r.complement_expression, r.ideal, r.domain) == r.complement_strata);
    }
}
