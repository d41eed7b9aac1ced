#include "locus.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "error.hpp"

namespace frobloc {

namespace {

constexpr std::string_view kUnion = "\xE2\x88\xAA";         // ∪
constexpr std::string_view kIntersection = "\xE2\x88\xA9";  // ∩
constexpr std::string_view kEmptySet = "\xE2\x88\x85";      // ∅

bool has(VarSet z, std::size_t i) { return (z >> i) & 1u; }

std::string var_list(VarSet z, std::size_t n, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (!has(z, i)) continue;
    if (!s.empty()) s += sep;
    s += 'x' + std::to_string(i + 1);
  }
  return s;
}

std::string closed_term(VarSet z, std::size_t n) { return "V(" + var_list(z, n, ",") + ")"; }

std::string join(const std::vector<std::string>& parts, std::string_view op, bool parenthesize_parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) {
      s += ' ';
      s += op;
      s += ' ';
    }
    s += parenthesize_parts && parts.size() > 1 && p.find(' ') != std::string::npos ? "(" + p + ")" : p;
  }
  return s;
}

// Minimal members of a set that is upward-closed within an upward-closed domain.
std::vector<VarSet> minimal_members(const StrataSet& set) {
  std::vector<VarSet> out;
  for (VarSet z : set.members()) {
    bool minimal = true;
    for (std::size_t i = 0; i < set.nvars() && minimal; ++i)
      if (has(z, i) && set.contains(z & ~(VarSet{1} << i))) minimal = false;
    if (minimal) out.push_back(z);
  }
  return out;
}

// has_subset[z]: some member of `set` is contained in z.
std::vector<bool> subset_reach(const StrataSet& set) {
  const std::size_t size = set.universe_size();
  std::vector<bool> reach(size);
  for (VarSet z = 0; z < size; ++z) {
    bool r = set.contains(z);
    for (std::size_t i = 0; i < set.nvars() && !r; ++i)
      if (has(z, i) && reach[z & ~(VarSet{1} << i)]) r = true;
    reach[z] = r;
  }
  return reach;
}

// has_superset[z]: some member of `set` contains z.
std::vector<bool> superset_reach(const StrataSet& set) {
  const std::size_t size = set.universe_size();
  std::vector<bool> reach(size);
  for (VarSet z = static_cast<VarSet>(size); z-- > 0;) {
    bool r = set.contains(z);
    for (std::size_t i = 0; i < set.nvars() && !r; ++i)
      if (!has(z, i) && reach[z | (VarSet{1} << i)]) r = true;
    reach[z] = r;
  }
  return reach;
}

// Strata of the full spectrum described by an expression before intersecting with V(I).
StrataSet closure_of(const std::vector<VarSet>& generators, std::size_t n) {
  StrataSet out(n);
  for (VarSet z = 0; z < out.universe_size(); ++z)
    for (VarSet g : generators)
      if ((g & z) == g) {
        out.insert(z);
        break;
      }
  return out;
}

std::string with_ambient(std::string body, bool exact, Ambient ambient, bool compound) {
  if (exact) return body;
  const std::string restriction = ambient == Ambient::VI ? "V(I)" : "Spec(R)";
  if (compound) body = "(" + body + ")";
  return body + " " + std::string(kIntersection) + " " + restriction;
}

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const MonomialIdeal& ideal)
      : text_(text), ideal_(ideal), n_(ideal.nvars()) {}

  StrataSet parse() {
    auto result = parse_union();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what + (pos_ < text_.size() ? " '" + std::string(1, text_[pos_]) + "'" : ""));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  StrataSet parse_union() {
    auto acc = parse_intersection();
    while (accept(kUnion) || accept("|")) acc = acc | parse_intersection();
    return acc;
  }

  StrataSet parse_intersection() {
    auto acc = parse_atom();
    while (accept(kIntersection) || accept("&")) acc = acc & parse_atom();
    return acc;
  }

  std::size_t parse_variable() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'x') fail("expected variable");
    const std::size_t start = pos_++;
    std::size_t k = 0;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      k = k * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (k > n_) break;
      ++pos_;
    }
    if (pos_ == digits || k == 0 || k > n_) {
      pos_ = start;
      fail("variable index out of range");
    }
    return k - 1;
  }

  StrataSet parse_atom() {
    skip_space();
    if (accept("(")) {
      auto inner = parse_union();
      expect(")");
      return inner;
    }
    if (accept("Spec")) {
      if (accept("(")) {
        if (!accept("R") && !accept("S")) fail("expected R or S");
        expect(")");
      }
      return StrataSet::all(n_);
    }
    if (accept("D")) {
      expect("(");
      VarSet m = 0;
      if (!accept("1")) {
        do {
          m |= VarSet{1} << parse_variable();
        } while (accept("*") || (skip_space(), pos_ < text_.size() && text_[pos_] == 'x'));
      }
      expect(")");
      StrataSet out(n_);
      for (VarSet z = 0; z < out.universe_size(); ++z)
        if ((z & m) == 0) out.insert(z);
      return out;
    }
    if (accept("V") || accept("v")) {
      expect("(");
      if (accept("I")) {
        expect(")");
        StrataSet out(n_);
        for (VarSet z = 0; z < out.universe_size(); ++z)
          if (is_admissible(ideal_, z)) out.insert(z);
        return out;
      }
      const bool doubled = accept("(");
      VarSet m = 0;
      do {
        m |= VarSet{1} << parse_variable();
      } while (accept(","));
      if (doubled) expect(")");
      expect(")");
      StrataSet out(n_);
      for (VarSet z = 0; z < out.universe_size(); ++z)
        if ((z & m) == m) out.insert(z);
      return out;
    }
    fail("expected D(...), V(...), Spec or '('");
  }

  std::string_view text_;
  const MonomialIdeal& ideal_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Stratum& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.nvars; ++i) {
    if (!has(s.in_prime, i)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

StrataSet::StrataSet(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxLocusVars)
    throw Error(Errc::ResourceLimit, "stratification is limited to " + std::to_string(kMaxLocusVars) + " variables");
  bits_.assign(std::size_t{1} << nvars, false);
}

StrataSet StrataSet::all(std::size_t nvars) {
  StrataSet s(nvars);
  s.bits_.assign(s.bits_.size(), true);
  return s;
}

std::size_t StrataSet::count() const noexcept { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

std::vector<VarSet> StrataSet::members() const {
  std::vector<VarSet> out;
  for (VarSet z = 0; z < bits_.size(); ++z)
    if (bits_[z]) out.push_back(z);
  return out;
}

StrataSet StrataSet::operator&(const StrataSet& o) const {
  StrataSet r(nvars_);
  for (std::size_t z = 0; z < bits_.size(); ++z) r.bits_[z] = bits_[z] && o.bits_.at(z);
  return r;
}

StrataSet StrataSet::operator|(const StrataSet& o) const {
  StrataSet r(nvars_);
  for (std::size_t z = 0; z < bits_.size(); ++z) r.bits_[z] = bits_[z] || o.bits_.at(z);
  return r;
}

StrataSet StrataSet::operator-(const StrataSet& o) const {
  StrataSet r(nvars_);
  for (std::size_t z = 0; z < bits_.size(); ++z) r.bits_[z] = bits_[z] && !o.bits_.at(z);
  return r;
}

MonomialIdeal substitute(const MonomialIdeal& ideal, VarSet inverted) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> exps(g.exponents().begin(), g.exponents().end());
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (i < 32 && has(inverted, i)) exps[i] = 0;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

bool is_admissible(const MonomialIdeal& ideal, VarSet in_prime) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return (g.support() & in_prime) != 0; });
}

std::vector<Stratum> enumerate_strata(const MonomialIdeal& ideal, bool restrict_to_v_of_i) {
  const std::size_t n = ideal.nvars();
  if (n > kMaxLocusVars)
    throw Error(Errc::ResourceLimit, "stratification is limited to " + std::to_string(kMaxLocusVars) + " variables");
  std::vector<Stratum> out;
  for (VarSet z = 0; z <= Stratum::full_mask(n); ++z) {
    if (!restrict_to_v_of_i || is_admissible(ideal, z)) out.push_back({n, z});
    if (z == Stratum::full_mask(n)) break;
  }
  return out;
}

StratumVerdict classify_stratum(const SquareFreeIdeal& ideal, std::uint32_t p, const Stratum& s, LocusMode mode) {
  const std::size_t n = ideal.nvars();
  if (s.nvars != n) throw Error(Errc::DimensionMismatch, "stratum and ideal have different variable counts");
  MonomialIdeal local = substitute(ideal.ideal(), s.inverted());
  if (local.is_unit())
    throw Error(Errc::InadmissibleStratum, "stratum " + to_string(s) + " does not lie in V(I)");

  StratumVerdict v{s, true, GenerationClass::PrincipallyGenerated, Certificate::DirectTheorem, std::nullopt};
  const SquareFreeIdeal validated(local);
  ColonDecomposition d = decompose(validated, p);
  if (d.j_part.empty()) {
    v.localized = std::move(d);
    return v;
  }

  const FrobeniusExponent q(p, 1);
  const MonomialIdeal forbidden =
      ideal_sum(frobenius_power(local, q), MonomialIdeal(n, {d.socle().at(q.q())}));
  const auto pattern = [&](const SymbolicMonomial& g) {
    bool zero = false, below = false, full = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!has(s.in_prime, i)) continue;
      zero = zero || g[i] == SymbolicExponent::zero();
      below = below || g[i] == SymbolicExponent::q_minus_one();
      full = full || g[i] == SymbolicExponent::q();
    }
    return zero && below && full && !forbidden.contains(g.at(q.q()));
  };

  v.generation = GenerationClass::InfinitelyGenerated;
  if (std::any_of(d.j_part.generators().begin(), d.j_part.generators().end(), pattern)) {
    v.certificate = Certificate::ComplementPattern;
  } else if (mode == LocusMode::Default) {
    v.certificate = Certificate::Transfer;
  } else {
    v.generation = GenerationClass::Undetermined;
    v.certificate = Certificate::None;
  }
  v.localized = std::move(d);
  return v;
}

bool is_upward_closed(const StrataSet& set, const StrataSet& domain) {
  const auto reach = subset_reach(set & domain);
  for (VarSet z = 0; z < domain.universe_size(); ++z)
    if (domain.contains(z) && reach[z] && !set.contains(z)) return false;
  return true;
}

Openness is_open(const StrataSet& inside, const StrataSet& undetermined, const StrataSet& domain) {
  const StrataSet undecided = undetermined & domain;
  const StrataSet base_complement = domain - inside - undecided;

  const auto reach = subset_reach(base_complement);
  bool open_possible = true;
  for (VarSet z = 0; z < domain.universe_size() && open_possible; ++z)
    if (domain.contains(z) && reach[z] && !base_complement.contains(z) && !undecided.contains(z))
      open_possible = false;

  bool closed_fails = !is_upward_closed(base_complement, domain);
  if (!closed_fails && !undecided.empty()) {
    const auto above = superset_reach(domain - base_complement);
    for (VarSet t : undecided.members()) {
      for (std::size_t i = 0; i < domain.nvars() && !closed_fails; ++i)
        if (!has(t, i) && above[t | (VarSet{1} << i)]) closed_fails = true;
      if (closed_fails) break;
    }
  }

  if (open_possible && !closed_fails) return Openness::Open;
  if (!open_possible) return Openness::NotOpen;
  return Openness::Unknown;
}

std::string render_expression(const StrataSet& set, const StrataSet& domain, Ambient ambient) {
  const std::size_t n = domain.nvars();
  const StrataSet s = set & domain;
  if (s.empty()) return std::string(kEmptySet);
  if (s == domain) return ambient == Ambient::VI ? "V(I)" : "Spec(R)";

  if (is_upward_closed(s, domain)) {
    const auto mins = minimal_members(s);
    std::vector<std::string> parts;
    for (VarSet z : mins) parts.push_back(closed_term(z, n));
    return with_ambient(join(parts, kUnion, false), closure_of(mins, n) == s, ambient, parts.size() > 1);
  }

  const StrataSet complement = domain - s;
  if (is_upward_closed(complement, domain)) {
    const auto mins = minimal_members(complement);
    std::vector<std::string> parts;
    for (VarSet z : mins) {
      std::vector<std::string> units;
      for (std::size_t i = 0; i < n; ++i)
        if (has(z, i)) units.push_back("D(x" + std::to_string(i + 1) + ")");
      parts.push_back(join(units, kUnion, false));
    }
    const StrataSet meaning = StrataSet::all(n) - closure_of(mins, n);
    const bool compound = parts.size() > 1 || parts.front().find(' ') != std::string::npos;
    return with_ambient(join(parts, kIntersection, true), meaning == s, ambient, compound);
  }

  // Cover by intervals {Z <= z <= Z + F}, each one V(x_Z) ∩ D(x_rest).
  StrataSet uncovered = s;
  StrataSet meaning(n);
  std::vector<std::string> parts;
  const VarSet full = Stratum::full_mask(n);
  while (!uncovered.empty()) {
    auto members = uncovered.members();
    const VarSet z = *std::min_element(members.begin(), members.end(), [](VarSet a, VarSet b) {
      auto pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    VarSet free = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (has(z, i)) continue;
      const VarSet trial = free | (VarSet{1} << i);
      bool ok = true;
      for (VarSet sub = trial;; sub = (sub - 1) & trial) {
        const VarSet member = z | sub;
        if (domain.contains(member) && !s.contains(member)) ok = false;
        if (!ok || sub == 0) break;
      }
      if (ok) free = trial;
    }
    for (VarSet sub = free;; sub = (sub - 1) & free) {
      uncovered.erase(z | sub);
      meaning.insert(z | sub);
      if (sub == 0) break;
    }
    const VarSet absent = full & ~(z | free);
    std::vector<std::string> factors;
    if (z != 0) factors.push_back(closed_term(z, n));
    if (absent != 0) factors.push_back("D(" + var_list(absent, n, "*") + ")");
    parts.push_back(factors.empty() ? "Spec(R)" : join(factors, kIntersection, false));
  }
  const bool compound = parts.size() > 1 || parts.front().find(' ') != std::string::npos;
  return with_ambient(join(parts, kUnion, true), meaning == s, ambient, compound);
}

StrataSet parse_strata_expression(std::string_view text, const MonomialIdeal& ideal, const StrataSet& domain) {
  if (domain.nvars() != ideal.nvars()) throw Error(Errc::DimensionMismatch, "domain and ideal disagree on nvars");
  return ExpressionParser(text, ideal).parse() & domain;
}

LocusReport build_locus(const SquareFreeIdeal& ideal, std::uint32_t p, const LocusOptions& options) {
  const std::size_t n = ideal.nvars();
  const MonomialIdeal& base = ideal.ideal();

  StrataSet admissible(n);
  for (const auto& s : enumerate_strata(base, true)) admissible.insert(s.in_prime);
  const StrataSet domain = options.ambient == Ambient::Full ? StrataSet::all(n) : admissible;

  LocusReport r{base,
                p,
                options,
                {},
                domain,
                StrataSet(n),
                StrataSet(n),
                StrataSet(n),
                Openness::Unknown,
                {},
                {},
                MonomialIdeal(n),
                StrataSet(n),
                {},
                {}};

  std::size_t transfers = 0;
  for (VarSet z : domain.members()) {
    const Stratum s{n, z};
    if (!admissible.contains(z)) {
      r.verdicts.push_back({s, false, GenerationClass::Undetermined, Certificate::None, std::nullopt});
      continue;
    }
    auto v = classify_stratum(ideal, p, s, options.mode);
    if (v.generation == GenerationClass::PrincipallyGenerated) r.u_strata.insert(z);
    if (v.generation == GenerationClass::Undetermined) r.undetermined_strata.insert(z);
    if (v.certificate == Certificate::Transfer) ++transfers;
    r.verdicts.push_back(std::move(v));
  }
  r.complement_strata = domain - r.u_strata - r.undetermined_strata;
  r.openness = is_open(r.u_strata, r.undetermined_strata, domain);
  r.u_expression = render_expression(r.u_strata, domain, options.ambient);
  r.complement_expression = render_expression(r.complement_strata, domain, options.ambient);

  r.u_prime_annihilator = compute_u_prime(decompose(ideal, p));
  for (VarSet z : admissible.members())
    if (!is_admissible(r.u_prime_annihilator, z)) r.u_prime_strata.insert(z);
  r.u_prime_expression = render_expression(r.u_prime_strata, domain, options.ambient);

  if (transfers > 0)
    r.notes.push_back(std::to_string(transfers) +
                      " stratum verdict(s) rest on transfer without an exhibited {0, p-1, p} generator");
  if (!r.undetermined_strata.empty())
    r.notes.push_back(std::to_string(r.undetermined_strata.count()) + " stratum verdict(s) undetermined in strict mode");
  if (options.ambient == Ambient::Full)
    r.notes.push_back("strata outside V(I) are counted in the complement of U");
  return r;
}

bool check_u_expression(LocusReport& report, std::string_view expected) {
  const StrataSet parsed = parse_strata_expression(expected, report.ideal, report.domain);
  if (parsed == report.u_strata) return true;
  std::string listed;
  for (VarSet z : parsed.members()) listed += (listed.empty() ? "" : " ") + to_string(Stratum{report.ideal.nvars(), z});
  const std::string described = parsed.empty() ? "which is empty here" : "which describes strata " + listed;
  report.notes.push_back("derived U = " + report.u_expression + " differs from the expected U = " +
                         std::string(expected) + " (" + described + ")");
  return false;
}

}  // namespace frobloc
