#include "ideal.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace frobloc {

namespace {

void require_same_nvars(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars())
    throw Error(Errc::DimensionMismatch, "ideals live in " + std::to_string(a.nvars()) + " and " +
                                             std::to_string(b.nvars()) + " variables");
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FrobeniusExponent::FrobeniusExponent(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::InvalidArgument, "Frobenius exponent e must be at least 1");
  for (std::uint32_t k = 0; k < e; ++k) {
    q_ *= p;
    if (q_ > std::numeric_limits<Exponent>::max())
      throw Error(Errc::Overflow, "q = " + std::to_string(p) + "^" + std::to_string(e) + " is too large");
  }
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const auto& g : generators)
    if (g.nvars() != nvars)
      throw Error(Errc::DimensionMismatch, "generator " + to_string(g) + " does not have " +
                                               std::to_string(nvars) + " variables");
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_)
    throw Error(Errc::DimensionMismatch, "membership test across different variable counts");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::uint64_t MonomialIdeal::support() const noexcept {
  std::uint64_t mask = 0;
  for (const auto& g : gens_) mask |= g.support();
  return mask;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  // A divisor has degree at most that of its multiple, so a degree-ascending sweep
  // only has to test against the generators already kept.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(multiply(x, y));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_nvars(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, const FrobeniusExponent& q) {
  return scale_generators(ideal, q.q());
}

MonomialIdeal scale_generators(const MonomialIdeal& ideal, std::uint64_t q) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(scale(g, q));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m) {
  if (m.nvars() != j.nvars()) throw Error(Errc::DimensionMismatch, "colon across different variable counts");
  std::vector<Monomial> gens;
  gens.reserve(j.size());
  for (const auto& g : j.generators()) gens.push_back(colon(g, m));
  return MonomialIdeal(j.nvars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i) {
  require_same_nvars(j, i);
  if (i.is_zero()) throw Error(Errc::InvalidArgument, "colon by the zero ideal");
  MonomialIdeal result = MonomialIdeal::unit(j.nvars());
  for (const auto& g : i.generators()) {
    result = ideal_intersect(result, colon(j, g));
    if (result.is_zero()) break;
  }
  return result;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    s += to_string(g);
  }
  return s;
}

}  // namespace frobloc
