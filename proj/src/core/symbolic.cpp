#include "symbolic.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace frobloc {

Exponent SymbolicExponent::at(std::uint64_t q) const {
  if (q < 2) throw Error(Errc::InvalidArgument, "symbolic exponents are instantiated at q >= 2");
  const auto max = static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max());
  if (slope != 0 && q > max / slope) throw Error(Errc::Overflow, "symbolic exponent overflows at q = " + std::to_string(q));
  const std::int64_t v = static_cast<std::int64_t>(slope * q) + offset;
  if (v < 0) throw Error(Errc::InvalidArgument, "symbolic exponent " + to_string(*this) + " is negative at q = " + std::to_string(q));
  if (static_cast<std::uint64_t>(v) > max) throw Error(Errc::Overflow, "symbolic exponent overflows at q = " + std::to_string(q));
  return static_cast<Exponent>(v);
}

bool uniformly_leq(const SymbolicExponent& a, const SymbolicExponent& b) noexcept {
  return a.slope <= b.slope && 2 * std::int64_t{a.slope} + a.offset <= 2 * std::int64_t{b.slope} + b.offset;
}

std::optional<SymbolicExponent> uniform_max(const SymbolicExponent& a, const SymbolicExponent& b) noexcept {
  if (uniformly_leq(a, b)) return b;
  if (uniformly_leq(b, a)) return a;
  return std::nullopt;
}

std::string to_string(const SymbolicExponent& x) {
  if (x.slope == 0) return std::to_string(x.offset);
  std::string s = x.slope == 1 ? "q" : std::to_string(x.slope) + "q";
  if (x.offset > 0) s += "+" + std::to_string(x.offset);
  if (x.offset < 0) s += std::to_string(x.offset);
  return s;
}

Monomial SymbolicMonomial::at(std::uint64_t q) const {
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exps_[i].at(q);
  return Monomial(std::move(out));
}

bool uniformly_divides(const SymbolicMonomial& a, const SymbolicMonomial& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::DimensionMismatch, "symbolic monomials of different lengths");
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (!uniformly_leq(a[i], b[i])) return false;
  return true;
}

SymbolicMonomial uniform_lcm(const SymbolicMonomial& a, const SymbolicMonomial& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::DimensionMismatch, "symbolic monomials of different lengths");
  std::vector<SymbolicExponent> out(a.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto m = uniform_max(a[i], b[i]);
    if (!m)
      throw Error(Errc::InvalidArgument, "exponents " + to_string(a[i]) + " and " + to_string(b[i]) +
                                             " have no uniform maximum");
    out[i] = *m;
  }
  return SymbolicMonomial(std::move(out));
}

SymbolicMonomial colon(const SymbolicMonomial& a, const Monomial& c) {
  if (a.nvars() != c.nvars()) throw Error(Errc::DimensionMismatch, "symbolic colon across different lengths");
  std::vector<SymbolicExponent> out(a.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) {
    SymbolicExponent shifted{a[i].slope, a[i].offset - std::int64_t{c[i]}};
    auto m = uniform_max(shifted, SymbolicExponent::zero());
    if (!m)
      throw Error(Errc::InvalidArgument, "exponent " + to_string(shifted) + " changes sign for q >= 2");
    out[i] = *m;
  }
  return SymbolicMonomial(std::move(out));
}

SymbolicMonomial frobenius_image(const Monomial& m) {
  std::vector<SymbolicExponent> out(m.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = SymbolicExponent{m[i], 0};
  return SymbolicMonomial(std::move(out));
}

std::string to_string(const SymbolicMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    const auto& x = m[i];
    if (x == SymbolicExponent::zero()) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (x != SymbolicExponent{0, 1}) {
      auto e = to_string(x);
      s += x.offset != 0 && x.slope != 0 ? "^(" + e + ")" : "^" + e;
    }
  }
  return s.empty() ? "1" : s;
}

SymbolicIdeal::SymbolicIdeal(std::size_t nvars, std::vector<SymbolicMonomial> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw Error(Errc::DimensionMismatch, "symbolic generator of the wrong length");
  std::sort(gens.begin(), gens.end(), std::greater<>());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && uniformly_divides(gens[j], gens[i]);
    if (!redundant) gens_.push_back(gens[i]);
  }
}

MonomialIdeal SymbolicIdeal::at(std::uint64_t q) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.at(q));
  return MonomialIdeal(nvars_, std::move(out));
}

SymbolicIdeal intersect(const SymbolicIdeal& a, const SymbolicIdeal& b) {
  if (a.nvars() != b.nvars()) throw Error(Errc::DimensionMismatch, "symbolic ideals of different lengths");
  std::vector<SymbolicMonomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(uniform_lcm(x, y));
  return SymbolicIdeal(a.nvars(), std::move(gens));
}

std::string to_string(const SymbolicIdeal& ideal) {
  if (ideal.empty()) return "0";
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    s += to_string(g);
  }
  return s;
}

}  // namespace frobloc
