#include "parse.hpp"

#include <cctype>
#include <limits>

#include "error.hpp"

namespace frobloc {

namespace {

class IdealLexer {
public:
  explicit IdealLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > std::numeric_limits<Exponent>::max()) throw ParseError(start, std::string(what) + " too large");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= text_.size()) throw ParseError(pos_, what + ", found end of input");
    throw ParseError(pos_, what + ", found '" + std::string(1, text_[pos_]) + "'");
  }

  std::size_t position() const noexcept { return pos_; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Factor {
  std::size_t index;
  std::uint64_t exponent;
};

}  // namespace

MonomialIdeal IdealExpression::to_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.emplace_back(g);
  return MonomialIdeal(nvars, std::move(gens));
}

IdealExpression parse_ideal(std::string_view text, std::optional<std::size_t> nvars) {
  IdealLexer lex(text);
  std::vector<std::vector<Factor>> raw;
  std::size_t max_index = 0;
  if (lex.at_end()) lex.fail("expected a generator");
  do {
    std::vector<Factor> factors;
    do {
      if (!lex.accept('x')) lex.fail("expected variable x<k>");
      const std::size_t at = lex.position() - 1;
      const auto k = lex.number("variable index");
      if (k == 0) throw ParseError(at, "variable indices start at 1");
      if (nvars && k > *nvars)
        throw ParseError(at, "variable x" + std::to_string(k) + " exceeds --vars " + std::to_string(*nvars));
      std::uint64_t e = 1;
      if (lex.accept('^')) {
        e = lex.number("exponent");
        if (e == 0) throw ParseError(lex.position() - 1, "exponent must be positive");
      }
      factors.push_back({static_cast<std::size_t>(k - 1), e});
      max_index = std::max<std::size_t>(max_index, k);
    } while (lex.accept('*'));
    raw.push_back(std::move(factors));
  } while (lex.accept(','));
  if (!lex.at_end()) lex.fail("expected ',' or '*'");

  IdealExpression expr;
  expr.nvars = nvars.value_or(max_index);
  for (const auto& factors : raw) {
    std::vector<Exponent> exps(expr.nvars, 0);
    for (const auto& f : factors) {
      const std::uint64_t v = std::uint64_t{exps[f.index]} + f.exponent;
      if (v > std::numeric_limits<Exponent>::max()) throw ParseError(0, "exponent overflow");
      exps[f.index] = static_cast<Exponent>(v);
    }
    expr.generators.push_back(std::move(exps));
  }
  return expr;
}

std::string render(const IdealExpression& expr) {
  std::string s;
  for (const auto& g : expr.generators) {
    if (!s.empty()) s += ", ";
    s += to_string(Monomial(g));
  }
  return s;
}

}  // namespace frobloc
