#include "monomial.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace frobloc {

namespace {

void require_same_nvars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw Error(Errc::DimensionMismatch, "monomials live in " + std::to_string(a.nvars()) +
                                             " and " + std::to_string(b.nvars()) + " variables");
}

template <class Op>
Monomial zip(const Monomial& a, const Monomial& b, Op op) {
  require_same_nvars(a, b);
  std::vector<Exponent> out(a.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return Monomial(std::move(out));
}

}  // namespace

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto c : exps_) d += c;
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent c) { return c == 0; });
}

bool Monomial::is_square_free() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent c) { return c <= 1; });
}

std::uint64_t Monomial::support() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](Exponent x, Exponent y) {
    if (x > std::numeric_limits<Exponent>::max() - y)
      throw Error(Errc::Overflow, "exponent overflow in monomial product");
    return static_cast<Exponent>(x + y);
  });
}

Monomial colon(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](Exponent x, Exponent y) { return x > y ? x - y : Exponent{0}; });
}

Monomial scale(const Monomial& m, std::uint64_t q) {
  std::vector<Exponent> out(m.nvars());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t v = std::uint64_t{m[i]} * q;
    if (q != 0 && v / q != m[i]) throw Error(Errc::Overflow, "exponent overflow in Frobenius scaling");
    if (v > std::numeric_limits<Exponent>::max())
      throw Error(Errc::Overflow, "exponent overflow in Frobenius scaling");
    out[i] = static_cast<Exponent>(v);
  }
  return Monomial(std::move(out));
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace frobloc
