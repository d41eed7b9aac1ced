// frobloc command-line front end. Talks to the library through the C API only.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobloc/frobloc.h"

namespace {

using json = nlohmann::ordered_json;

struct ExitError {
  int code;
  std::string message;
};

void check(frobloc_status s) {
  if (s != FROBLOC_OK) throw ExitError{s, frobloc_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Ideal = std::unique_ptr<frobloc_ideal, Deleter<frobloc_ideal, frobloc_ideal_free>>;
using Decomposition = std::unique_ptr<frobloc_decomposition, Deleter<frobloc_decomposition, frobloc_decomposition_free>>;
using Locus = std::unique_ptr<frobloc_locus, Deleter<frobloc_locus, frobloc_locus_free>>;
using Profile = std::unique_ptr<frobloc_profile, Deleter<frobloc_profile, frobloc_profile_free>>;

struct Options {
  std::string ideal_text;
  uint32_t vars = 0;
  uint32_t p = 2;
  uint32_t e = 1;
  uint32_t max_e = 3;
  bool json_out = false;
  bool check = false;
  bool strict = false;
  std::string ambient = "vi";
  std::string expect_u;
  uint64_t max_gens = 0;
};

Ideal read_ideal(const Options& o) {
  std::string text = o.ideal_text;
  if (text == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  }
  frobloc_ideal* raw = nullptr;
  if (frobloc_ideal_parse(text.c_str(), o.vars, &raw) != FROBLOC_OK) {
    std::string msg = frobloc_last_error();
    const std::size_t at = frobloc_last_error_position();
    msg += "\n  " + text + "\n  " + std::string(std::min(at, text.size()), ' ') + "^";
    throw ExitError{FROBLOC_ERR_PARSE, msg};
  }
  return Ideal(raw);
}

json exponent_rows(const frobloc_ideal* ideal) {
  json rows = json::array();
  std::vector<uint32_t> buf(frobloc_ideal_nvars(ideal));
  for (size_t i = 0; i < frobloc_ideal_ngens(ideal); ++i) {
    check(frobloc_ideal_generator(ideal, i, buf.data()));
    rows.push_back(buf);
  }
  return rows;
}

json symbolic_rows(const frobloc_decomposition* d, frobloc_part part) {
  json rows = json::array();
  std::vector<frobloc_sym_exponent> buf(frobloc_decomposition_nvars(d));
  for (size_t i = 0; i < frobloc_decomposition_part_size(d, part); ++i) {
    check(frobloc_decomposition_part_generator(d, part, i, buf.data()));
    json row = json::array();
    for (const auto& x : buf) row.push_back({{"a", x.slope}, {"b", x.offset}});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> beta_of(const frobloc_decomposition* d) {
  std::vector<uint8_t> beta(frobloc_decomposition_nvars(d));
  frobloc_decomposition_beta(d, beta.data());
  return {beta.begin(), beta.end()};
}

const char* class_key(frobloc_class c) {
  switch (c) {
    case FROBLOC_PRINCIPAL: return "principal";
    case FROBLOC_INFINITE: return "infinite";
    case FROBLOC_OUTSIDE: return "outside";
    default: return "undetermined";
  }
}

const char* class_name(frobloc_class c) {
  switch (c) {
    case FROBLOC_PRINCIPAL: return "PrincipallyGenerated";
    case FROBLOC_INFINITE: return "InfinitelyGenerated";
    case FROBLOC_OUTSIDE: return "OutsideV(I)";
    default: return "Undetermined";
  }
}

const char* certificate_name(frobloc_certificate c) {
  switch (c) {
    case FROBLOC_CERT_DIRECT: return "DirectTheorem";
    case FROBLOC_CERT_COMPLEMENT_PATTERN: return "ComplementPattern";
    case FROBLOC_CERT_TRANSFER: return "Transfer";
    default: return "None";
  }
}

const char* openness_key(frobloc_openness o) {
  switch (o) {
    case FROBLOC_OPEN: return "open";
    case FROBLOC_NOT_OPEN: return "not_open";
    default: return "unknown";
  }
}

const char* openness_name(frobloc_openness o) {
  switch (o) {
    case FROBLOC_OPEN: return "Open";
    case FROBLOC_NOT_OPEN: return "NotOpen";
    default: return "Unknown";
  }
}

std::vector<int> variables_of(uint32_t mask, uint32_t n) {
  std::vector<int> out;
  for (uint32_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) out.push_back(static_cast<int>(i + 1));
  return out;
}

std::string stratum_label(uint32_t mask, uint32_t n) {
  std::string s = "{";
  for (int v : variables_of(mask, n)) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + "}";
}

std::string beta_text(const std::vector<int>& beta) {
  std::string s = "(";
  for (std::size_t i = 0; i < beta.size(); ++i) s += (i ? "," : "") + std::to_string(beta[i]);
  return s + ")";
}

json base_json(const frobloc_ideal* ideal, uint32_t p) {
  json j;
  j["n"] = frobloc_ideal_nvars(ideal);
  j["p"] = p;
  return j;
}

int run_colon(const Options& o) {
  auto ideal = read_ideal(o);
  frobloc_ideal* raw = nullptr;
  check(frobloc_frobenius_colon(ideal.get(), o.p, o.e, &raw));
  Ideal result(raw);
  if (o.json_out) {
    json j = base_json(ideal.get(), o.p);
    j["e"] = o.e;
    j["generators"] = exponent_rows(ideal.get());
    j["colon"] = exponent_rows(result.get());
    std::cout << j.dump() << '\n';
    return 0;
  }
  uint64_t q = 1;
  for (uint32_t k = 0; k < o.e; ++k) q *= o.p;
  std::cout << "I = " << frobloc_ideal_text(ideal.get()) << '\n'
            << "q = " << q << " (p = " << o.p << ", e = " << o.e << ")\n"
            << "(I^[q] : I) = " << frobloc_ideal_text(result.get()) << '\n';
  return 0;
}

Decomposition decompose(const frobloc_ideal* ideal, uint32_t p) {
  frobloc_decomposition* raw = nullptr;
  check(frobloc_decompose(ideal, p, &raw));
  return Decomposition(raw);
}

int run_check_oracle(const frobloc_ideal* ideal, const Options& o) {
  size_t bad = 0;
  check(frobloc_cross_check(ideal, o.p, o.max_e, o.max_gens, &bad));
  if (bad == 0) return 0;
  std::cerr << "error: classifier and oracle disagree on " << bad << " stratum(s)\n";
  return FROBLOC_ERR_DISAGREEMENT;
}

int run_decompose(const Options& o) {
  auto ideal = read_ideal(o);
  auto d = decompose(ideal.get(), o.p);
  const auto cls = frobloc_decomposition_class(d.get());
  if (o.json_out) {
    json j = base_json(ideal.get(), o.p);
    j["generators"] = exponent_rows(ideal.get());
    j["frobenius_part"] = symbolic_rows(d.get(), FROBLOC_PART_FROBENIUS);
    j["j_part"] = symbolic_rows(d.get(), FROBLOC_PART_J);
    j["beta"] = beta_of(d.get());
    j["class"] = class_key(cls);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "I = " << frobloc_ideal_text(ideal.get()) << '\n'
            << "p = " << o.p << ", q = p^e for every e >= 1\n"
            << "beta = " << beta_text(beta_of(d.get())) << '\n'
            << "(I^[q] : I) = I^[q] + J_q + ((x^beta)^(q-1))\n"
            << "  I^[q]          : " << frobloc_decomposition_part_text(d.get(), FROBLOC_PART_FROBENIUS) << '\n'
            << "  J_q            : " << frobloc_decomposition_part_text(d.get(), FROBLOC_PART_J) << '\n'
            << "  (x^beta)^(q-1) : " << frobloc_decomposition_part_text(d.get(), FROBLOC_PART_SOCLE) << '\n'
            << "class: " << class_name(cls) << '\n';
  return 0;
}

int run_classify(const Options& o) {
  auto ideal = read_ideal(o);
  auto d = decompose(ideal.get(), o.p);
  const auto cls = frobloc_decomposition_class(d.get());
  if (o.json_out) {
    json j = base_json(ideal.get(), o.p);
    j["generators"] = exponent_rows(ideal.get());
    j["j_part"] = symbolic_rows(d.get(), FROBLOC_PART_J);
    j["beta"] = beta_of(d.get());
    j["class"] = class_key(cls);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << class_name(cls) << '\n';
    if (cls == FROBLOC_PRINCIPAL) {
      frobloc_ideal* raw = nullptr;
      check(frobloc_decomposition_instantiate(d.get(), FROBLOC_PART_SOCLE, 1, &raw));
      Ideal witness(raw);
      std::cout << "generator: (x^beta)^(p-1) = " << frobloc_ideal_text(witness.get()) << '\n';
    } else {
      std::cout << "J_q: " << frobloc_decomposition_part_text(d.get(), FROBLOC_PART_J) << '\n';
    }
  }
  return o.check ? run_check_oracle(ideal.get(), o) : 0;
}

Locus build_locus(const frobloc_ideal* ideal, const Options& o) {
  frobloc_locus_options opts{o.strict ? 1 : 0, o.ambient == "full" ? 1 : 0};
  frobloc_locus* raw = nullptr;
  check(frobloc_locus_build(ideal, o.p, &opts, &raw));
  return Locus(raw);
}

int run_uprime(const Options& o) {
  auto ideal = read_ideal(o);
  auto d = decompose(ideal.get(), o.p);
  frobloc_ideal* raw = nullptr;
  check(frobloc_u_prime(d.get(), &raw));
  Ideal ann(raw);
  auto locus = build_locus(ideal.get(), o);
  const char* expr = frobloc_locus_expression_text(locus.get(), FROBLOC_EXPR_U_PRIME);
  if (o.json_out) {
    json j = base_json(ideal.get(), o.p);
    j["generators"] = exponent_rows(ideal.get());
    j["j_part"] = symbolic_rows(d.get(), FROBLOC_PART_J);
    j["annihilator"] = exponent_rows(ann.get());
    j["u_prime"] = expr;
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "Ann((I^[p] + J_p) / I^[p]) = " << frobloc_ideal_text(ann.get()) << '\n'
            << "U' = " << expr << '\n';
  return 0;
}

int run_locus(const Options& o) {
  auto ideal = read_ideal(o);
  auto locus = build_locus(ideal.get(), o);
  const uint32_t n = frobloc_ideal_nvars(ideal.get());
  if (!o.expect_u.empty()) {
    int matches = 0;
    check(frobloc_locus_check_u(locus.get(), o.expect_u.c_str(), &matches));
  }
  const auto openness = frobloc_locus_openness(locus.get());
  std::vector<std::string> notes;
  for (size_t i = 0; i < frobloc_locus_note_count(locus.get()); ++i) notes.emplace_back(frobloc_locus_note(locus.get(), i));

  if (o.json_out) {
    json j = base_json(ideal.get(), o.p);
    j["generators"] = exponent_rows(ideal.get());
    json strata = json::array();
    for (size_t i = 0; i < frobloc_locus_stratum_count(locus.get()); ++i) {
      frobloc_stratum_info info{};
      check(frobloc_locus_stratum(locus.get(), i, &info));
      strata.push_back({{"in_prime", variables_of(info.in_prime, n)},
                        {"class", class_key(info.generation)},
                        {"certificate", certificate_name(info.certificate)}});
    }
    j["strata"] = std::move(strata);
    j["openness"] = openness_key(openness);
    j["u"] = frobloc_locus_expression_text(locus.get(), FROBLOC_EXPR_U);
    j["u_complement"] = frobloc_locus_expression_text(locus.get(), FROBLOC_EXPR_COMPLEMENT);
    j["u_prime"] = frobloc_locus_expression_text(locus.get(), FROBLOC_EXPR_U_PRIME);
    j["notes"] = notes;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "I = " << frobloc_ideal_text(ideal.get()) << ", p = " << o.p
              << ", mode = " << (o.strict ? "strict" : "default")
              << ", ambient = " << (o.ambient == "full" ? "Spec(R)" : "V(I)") << '\n';
    std::printf("%-16s %-22s %-18s %s\n", "stratum", "class", "certificate", "localized J");
    for (size_t i = 0; i < frobloc_locus_stratum_count(locus.get()); ++i) {
      frobloc_stratum_info info{};
      check(frobloc_locus_stratum(locus.get(), i, &info));
      std::printf("%-16s %-22s %-18s %s\n", stratum_label(info.in_prime, n).c_str(), class_name(info.generation),
                  certificate_name(info.certificate), frobloc_locus_stratum_j_text(locus.get(), i));
    }
    std::cout << "U   = " << frobloc_locus_expression_text(locus.get(), FROBLOC_EXPR_U) << '\n'
              << "U^c = " << frobloc_locus_expression_text(locus.get(), FROBLOC_EXPR_COMPLEMENT) << '\n'
              << "U'  = " << frobloc_locus_expression_text(locus.get(), FROBLOC_EXPR_U_PRIME) << "  (Ann = "
              << frobloc_ideal_text(frobloc_locus_u_prime_annihilator(locus.get())) << ")\n"
              << "openness: " << openness_name(openness) << '\n';
    for (const auto& note : notes) std::cout << "note: " << note << '\n';
  }
  return o.check ? run_check_oracle(ideal.get(), o) : 0;
}

int run_oracle(const Options& o) {
  auto ideal = read_ideal(o);
  frobloc_profile* raw = nullptr;
  check(frobloc_oracle_run(ideal.get(), o.p, o.max_e, o.max_gens, &raw));
  Profile profile(raw);
  const bool consistent = frobloc_profile_consistent(profile.get());
  if (o.json_out) {
    json j = base_json(ideal.get(), o.p);
    j["max_e"] = o.max_e;
    j["generators"] = exponent_rows(ideal.get());
    json needs = json::array(), f = json::array(), l = json::array();
    for (uint32_t e = 1; e <= o.max_e; ++e) {
      needs.push_back(frobloc_profile_needs_new(profile.get(), e) != 0);
      f.push_back(exponent_rows(frobloc_profile_F(profile.get(), e)));
      l.push_back(exponent_rows(frobloc_profile_L(profile.get(), e)));
    }
    j["needs_new"] = std::move(needs);
    j["F"] = std::move(f);
    j["L"] = std::move(l);
    j["class"] = consistent ? "principal" : "infinite";
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "I = " << frobloc_ideal_text(ideal.get()) << ", p = " << o.p << '\n';
    for (uint32_t e = 1; e <= o.max_e; ++e) {
      std::cout << "e = " << e << ": needs_new = " << (frobloc_profile_needs_new(profile.get(), e) ? "true" : "false")
                << "\n  F_e = " << frobloc_ideal_text(frobloc_profile_F(profile.get(), e))
                << "\n  L_e = " << frobloc_ideal_text(frobloc_profile_L(profile.get(), e)) << '\n';
    }
    std::cout << (consistent ? "consistent with finite (principal) generation"
                             : "consistent with infinite generation: new generators needed")
              << " up to e = " << o.max_e << '\n';
  }
  return 0;
}

struct EnumerationSink {
  bool json_out;
  json rows = json::array();
};

void visit_entry(const frobloc_ideal* ideal, uint64_t orbit, frobloc_class cls, frobloc_openness openness,
                 uint64_t disagreements, void* user) {
  auto* sink = static_cast<EnumerationSink*>(user);
  if (sink->json_out) {
    sink->rows.push_back({{"generators", exponent_rows(ideal)},
                          {"orbit_size", orbit},
                          {"class", class_key(cls)},
                          {"openness", openness_key(openness)},
                          {"disagreements", disagreements}});
  } else {
    std::printf("%-40s orbit %-4llu %-22s %-8s%s\n", frobloc_ideal_text(ideal), static_cast<unsigned long long>(orbit),
                class_name(cls), openness_name(openness), disagreements ? "  DISAGREES" : "");
  }
}

int run_enumerate(const Options& o) {
  if (o.vars == 0) throw ExitError{FROBLOC_ERR_INVALID, "enumerate requires --vars"};
  frobloc_enumeration_options opts{o.check ? 1 : 0, o.strict ? 1 : 0, o.max_e, o.max_gens};
  EnumerationSink sink{o.json_out};
  frobloc_enumeration_summary s{};
  check(frobloc_enumerate(o.vars, o.p, &opts, visit_entry, &sink, &s));
  if (o.json_out) {
    json j;
    j["n"] = o.vars;
    j["p"] = o.p;
    j["ideals"] = std::move(sink.rows);
    j["summary"] = {{"representatives", s.representatives},
                    {"ideals", s.ideals},
                    {"principal", s.principal},
                    {"infinite", s.infinite},
                    {"principal_orbits", s.principal_orbits},
                    {"infinite_orbits", s.infinite_orbits},
                    {"open", s.open},
                    {"not_open", s.not_open},
                    {"unknown", s.unknown},
                    {"disagreements", s.disagreements}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "representatives: " << s.representatives << " (" << s.ideals << " ideals)\n"
              << "principal: " << s.principal << " (" << s.principal_orbits << " ideals)\n"
              << "infinite: " << s.infinite << " (" << s.infinite_orbits << " ideals)\n"
              << "open: " << s.open << ", not open: " << s.not_open << ", unknown: " << s.unknown << '\n';
    if (o.check) std::cout << "oracle disagreements: " << s.disagreements << '\n';
  }
  if (o.check && s.disagreements > 0) return FROBLOC_ERR_DISAGREEMENT;
  return 0;
}

std::optional<uint64_t> env_max_gens() {
  const char* raw = std::getenv("FROBLOC_MAX_GENS");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw ExitError{FROBLOC_ERR_INVALID, "FROBLOC_MAX_GENS must be a positive integer"};
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frobloc: Frobenius powers, colon ideals and finitely generated loci of face ideals"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool takes_ideal) {
    if (takes_ideal) sub->add_option("ideal", o.ideal_text, "ideal such as \"x1*x2, x2*x3\", or - for stdin")->required();
    sub->add_option("--vars", o.vars, "number of variables (default: largest index)");
    sub->add_option("--p", o.p, "characteristic (prime)");
    sub->add_flag("--json", o.json_out, "emit JSON");
  };

  auto* colon = app.add_subcommand("colon", "concrete (I^[q] : I) at q = p^e");
  add_common(colon, true);
  colon->add_option("--e", o.e, "Frobenius exponent e >= 1");

  auto* decompose_cmd = app.add_subcommand("decompose", "symbolic I^[q] + J_q + ((x^beta)^(q-1))");
  add_common(decompose_cmd, true);

  auto* classify = app.add_subcommand("classify", "principal or infinite generation");
  add_common(classify, true);
  classify->add_flag("--check", o.check, "cross-check every stratum against the generation oracle");
  classify->add_option("--max-e", o.max_e, "oracle depth for --check");

  auto* uprime = app.add_subcommand("uprime", "annihilator ideal and the open set U'");
  add_common(uprime, true);

  auto* locus = app.add_subcommand("locus", "stratum table, U, U^c and openness");
  add_common(locus, true);
  locus->add_flag("--strict", o.strict, "leave strata without the exhibited pattern undetermined");
  locus->add_option("--ambient", o.ambient, "vi (Spec of the quotient) or full (Spec of the polynomial ring)")
      ->check(CLI::IsMember({"vi", "full"}));
  locus->add_option("--expect-u", o.expect_u, "compare U with a D(.)/V(.) expression and note a mismatch");
  locus->add_flag("--check", o.check, "cross-check every stratum against the generation oracle");
  locus->add_option("--max-e", o.max_e, "oracle depth for --check");

  auto* oracle = app.add_subcommand("oracle", "brute-force F_e versus L_e generation profile");
  add_common(oracle, true);
  oracle->add_option("--max-e", o.max_e, "largest degree e examined");

  auto* enumerate = app.add_subcommand("enumerate", "classify all square-free ideals up to permutation");
  add_common(enumerate, false);
  enumerate->add_flag("--check", o.check, "cross-check every stratum against the generation oracle");
  enumerate->add_flag("--strict", o.strict, "strict locus mode");
  enumerate->add_option("--max-e", o.max_e, "oracle depth for --check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return FROBLOC_ERR_PARSE;
  }

  try {
    if (auto bound = env_max_gens()) o.max_gens = *bound;
    if (o.max_e == 0) throw ExitError{FROBLOC_ERR_INVALID, "--max-e must be at least 1"};
    if (*colon) return run_colon(o);
    if (*decompose_cmd) return run_decompose(o);
    if (*classify) return run_classify(o);
    if (*uprime) return run_uprime(o);
    if (*locus) return run_locus(o);
    if (*oracle) return run_oracle(o);
    if (*enumerate) return run_enumerate(o);
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return FROBLOC_ERR_INTERNAL;
  }
  return 0;
}
