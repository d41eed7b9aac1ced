#include "colon_structure.hpp"

#include <algorithm>

#include "error.hpp"

namespace frobloc {

SquareFreeIdeal::SquareFreeIdeal(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  if (ideal_.is_zero()) throw Error(Errc::DegenerateIdeal, "the zero ideal has no Frobenius structure");
  if (ideal_.is_unit()) throw Error(Errc::DegenerateIdeal, "the unit ideal has no Frobenius structure");
  for (const auto& g : ideal_.generators())
    if (!g.is_square_free())
      throw Error(Errc::SquareFreeViolation, "generator " + to_string(g) + " is not square-free");
}

SquareFreeIdeal validate_square_free(const MonomialIdeal& ideal) { return SquareFreeIdeal(ideal); }

std::vector<std::uint8_t> compute_beta(const MonomialIdeal& ideal) {
  std::vector<std::uint8_t> beta(ideal.nvars(), 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < g.nvars(); ++i)
      if (g[i] != 0) beta[i] = 1;
  return beta;
}

SymbolicIdeal colon_symbolic(const SquareFreeIdeal& ideal, std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  const auto& gens = ideal.ideal().generators();
  const std::size_t n = ideal.nvars();

  std::vector<SymbolicMonomial> scaled;
  scaled.reserve(gens.size());
  for (const auto& g : gens) scaled.push_back(frobenius_image(g));

  std::optional<SymbolicIdeal> result;
  for (const auto& gamma : gens) {
    std::vector<SymbolicMonomial> piece;
    piece.reserve(scaled.size());
    for (const auto& s : scaled) piece.push_back(colon(s, gamma));
    SymbolicIdeal term(n, std::move(piece));
    result = result ? intersect(*result, term) : std::move(term);
  }
  return *result;
}

SymbolicMonomial ColonDecomposition::socle() const {
  std::vector<SymbolicExponent> exps(beta.size(), SymbolicExponent::zero());
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i]) exps[i] = SymbolicExponent::q_minus_one();
  return SymbolicMonomial(std::move(exps));
}

MonomialIdeal InstantiatedDecomposition::combined() const {
  return ideal_sum(ideal_sum(frobenius_part, j_part), socle);
}

ColonDecomposition decompose(const SquareFreeIdeal& ideal, std::uint32_t p) {
  const std::size_t n = ideal.nvars();
  ColonDecomposition d{ideal.ideal(), p, SymbolicIdeal(n), SymbolicIdeal(n), compute_beta(ideal.ideal())};

  std::vector<SymbolicMonomial> frob;
  for (const auto& g : ideal.ideal().generators()) frob.push_back(frobenius_image(g));
  d.frobenius_part = SymbolicIdeal(n, std::move(frob));

  const SymbolicMonomial socle = d.socle();
  std::vector<SymbolicMonomial> residual;
  const SymbolicIdeal full = colon_symbolic(ideal, p);
  for (const auto& g : full.generators()) {
    const bool in_frobenius = std::any_of(d.frobenius_part.generators().begin(), d.frobenius_part.generators().end(),
                                          [&](const SymbolicMonomial& f) { return uniformly_divides(f, g); });
    if (in_frobenius || uniformly_divides(socle, g)) continue;
    residual.push_back(g);
  }
  d.j_part = SymbolicIdeal(n, std::move(residual));
  return d;
}

MonomialIdeal instantiate(const SymbolicIdeal& ideal, std::uint32_t p, std::uint32_t e) {
  return ideal.at(FrobeniusExponent(p, e).q());
}

InstantiatedDecomposition instantiate(const ColonDecomposition& d, std::uint32_t e) {
  const auto q = FrobeniusExponent(d.p, e).q();
  return {d.frobenius_part.at(q), d.j_part.at(q), MonomialIdeal(d.beta.size(), {d.socle().at(q)})};
}

GlobalClassification classify_global(const ColonDecomposition& d) {
  if (!d.j_part.empty()) return {GenerationClass::InfinitelyGenerated, std::nullopt};
  return {GenerationClass::PrincipallyGenerated, d.socle().at(d.p)};
}

MonomialIdeal compute_u_prime(const ColonDecomposition& d) {
  const std::size_t n = d.base_ideal.nvars();
  if (d.j_part.empty()) return MonomialIdeal::unit(n);
  const FrobeniusExponent q(d.p, 1);
  return colon(frobenius_power(d.base_ideal, q), d.j_part.at(q.q()));
}

}  // namespace frobloc
