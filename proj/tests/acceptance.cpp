#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "brute.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"
#include "locus.hpp"

using namespace frobloc;
using fixtures::ideal;
using fixtures::square_free;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

SymbolicMonomial row(std::initializer_list<SymbolicExponent> xs) { return SymbolicMonomial(std::vector(xs)); }

constexpr SymbolicExponent Z = SymbolicExponent::zero();
constexpr SymbolicExponent Q1 = SymbolicExponent::q_minus_one();
constexpr SymbolicExponent Q = SymbolicExponent::q();

Outcome j_formulas() {
  struct Case {
    const char* text;
    SymbolicIdeal j;
  };
  const Case cases[] = {
      {"x1*x2, x2*x3", SymbolicIdeal(3, {row({Q, Q1, Z}), row({Z, Q1, Q})})},
      {"x1*x2*x3, x3*x4", SymbolicIdeal(4, {row({Q, Q, Q1, Z}), row({Z, Z, Q1, Q})})},
      {"x1*x2*x3, x3*x4, x4*x5", SymbolicIdeal(5, {row({Q1, Q1, Q, Q1, Z}), row({Z, Z, Q1, Q, Q1})})},
  };
  Outcome o;
  for (const auto& c : cases)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      auto d = decompose(square_free(c.text), p);
      const bool beta_ok = std::all_of(d.beta.begin(), d.beta.end(), [](auto b) { return b == 1; });
      if (!(d.j_part == c.j) || !beta_ok) {
        o.pass = false;
        o.detail += std::string(c.text) + " p=" + std::to_string(p) + " gave " + to_string(d.j_part) + "; ";
      }
    }
  if (o.pass) o.detail = "3 ideals x 3 primes";
  return o;
}

Outcome e_stability() {
  Outcome o;
  int compared = 0;
  for (const char* text : fixtures::named())
    for (std::uint32_t p : {2u, 3u}) {
      auto i = square_free(text);
      auto s = colon_symbolic(i, p);
      for (std::uint32_t e : {1u, 2u, 3u}) {
        auto concrete = colon(frobenius_power(i.ideal(), FrobeniusExponent(p, e)), i.ideal());
        ++compared;
        if (!(instantiate(s, p, e) == concrete)) {
          o.pass = false;
          o.detail += std::string(text) + " p=" + std::to_string(p) + " e=" + std::to_string(e) + "; ";
        }
      }
    }
  if (o.pass) o.detail = std::to_string(compared) + " (ideal, p, e) cases";
  return o;
}

Outcome path_locus() {
  auto r = build_locus(square_free("x1*x2, x2*x3"), 2);
  const VarSet x2_only = 0b010, maximal = 0b111;
  Outcome o;
  o.pass = r.complement_strata.members() == std::vector<VarSet>{maximal} &&
           r.complement_expression == "V(x1,x2,x3)" && r.u_prime_annihilator == ideal("x2", 3) &&
           r.u_prime_expression == "D(x2) ∩ V(I)" && r.u_strata.contains(x2_only) &&
           !r.u_prime_strata.contains(x2_only) && (r.u_prime_strata - r.u_strata).empty() &&
           r.u_prime_strata.count() < r.u_strata.count() && r.openness == Openness::Open;
  o.detail = "U^c = " + r.complement_expression + ", U' = " + r.u_prime_expression;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t ideals = 0, strata = 0, bad = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& c : canonical_square_free_ideals(n)) {
      ++ideals;
      strata += enumerate_strata(c.ideal.ideal(), true).size();
      auto dis = cross_check(c.ideal, 2, 3);
      bad += dis.size();
      for (const auto& d : dis) o.detail += to_string(c.ideal.ideal()) + " at " + to_string(d.stratum) + "; ";
    }
  o.pass = bad == 0;
  if (o.pass) o.detail = std::to_string(ideals) + " ideals, " + std::to_string(strata) + " strata, 0 disagreements";
  return o;
}

Outcome cone_locus() {
  auto r = build_locus(square_free("x1*x2*x3, x3*x4"), 2);
  const std::vector<VarSet> expected = {0b1101, 0b1110, 0b1111};
  const bool matches_printed = check_u_expression(r, "D(x1x3x4)");
  Outcome o;
  o.pass = r.complement_strata.members() == expected && r.openness == Openness::Open && !matches_printed &&
           r.notes.size() == 1;
  o.detail = "U^c = " + r.complement_expression + (r.notes.empty() ? "" : "; " + r.notes.front());
  return o;
}

Outcome principal_profiles() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& c : canonical_square_free_ideals(n)) {
      if (!decompose(c.ideal, 2).j_part.empty()) continue;
      ++checked;
      auto prof = classify_up_to(c.ideal.ideal(), 2, 3);
      if (prof.needs_new != std::vector<bool>{true, false, false}) {
        o.pass = false;
        o.detail += to_string(c.ideal.ideal()) + "; ";
      }
    }
  if (o.pass) o.detail = std::to_string(checked) + " principal ideals";
  return o;
}

Outcome membership() {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> nvars(1, 4);
  std::uniform_int_distribution<int> pick(0, 5);
  const std::pair<std::uint32_t, std::uint32_t> pe[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};
  int failures = 0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = nvars(rng);
    const auto gens = brute::random_square_free(rng, n);
    const auto [p, e] = pe[pick(rng)];
    const FrobeniusExponent q(p, e);
    const auto i = brute::ideal_of(n, gens);
    const auto j = frobenius_power(i, q);
    const auto c = colon(j, i);
    const auto jg = brute::scale(gens, static_cast<std::uint32_t>(q.q()));
    const auto m = brute::random_monomial(rng, n, static_cast<std::uint32_t>(4 * q.q()));
    const Monomial mm(std::vector<Exponent>(m.begin(), m.end()));
    bool in_colon = true;
    for (const auto& g : gens) in_colon = in_colon && brute::member(jg, brute::add(m, g));
    if (c.contains(mm) != in_colon) ++failures;
    if (j.contains(mm) != brute::member(jg, m)) ++failures;
  }
  return {failures == 0, "1000 rounds, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"J formulas of the three named ideals", 1.0, j_formulas},
      {"symbolic colon stable in e", 10.0, e_stability},
      {"locus of (x1x2, x2x3)", 1.0, path_locus},
      {"stratum classifier vs generation oracle", 120.0, oracle_equivalence},
      {"locus of (x1x2x3, x3x4)", 5.0, cone_locus},
      {"principal generation profiles", 10.0, principal_profiles},
      {"colon and frobenius membership", 10.0, membership},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = o.pass && in_time;
    failed += ok ? 0 : 1;
    std::printf("%s [%d] %s (%.3f s, limit %.0f s) %s%s\n", ok ? "PASS" : "FAIL", index, c.name, secs,
                c.limit_seconds, o.detail.c_str(), in_time ? "" : " [too slow]");
  }
  return failed == 0 ? 0 : 1;
}
