#include "frobloc/frobloc.h"

#include <memory>
#include <new>
#include <string>

#include "../core/colon_structure.hpp"
#include "../core/enumerate.hpp"
#include "../core/error.hpp"
#include "../core/locus.hpp"
#include "../core/oracle.hpp"
#include "../core/parse.hpp"

struct frobloc_ideal {
  explicit frobloc_ideal(frobloc::MonomialIdeal i) : ideal(std::move(i)), text(frobloc::to_string(ideal)) {}
  frobloc::MonomialIdeal ideal;
  std::string text;
};

struct frobloc_decomposition {
  explicit frobloc_decomposition(frobloc::ColonDecomposition d)
      : decomposition(std::move(d)),
        frobenius_text(to_string(decomposition.frobenius_part)),
        j_text(to_string(decomposition.j_part)),
        socle_text(to_string(decomposition.socle())) {}
  frobloc::ColonDecomposition decomposition;
  std::string frobenius_text;
  std::string j_text;
  std::string socle_text;
};

struct frobloc_locus {
  explicit frobloc_locus(frobloc::LocusReport r) : report(std::move(r)), annihilator(report.u_prime_annihilator) {
    for (const auto& v : report.verdicts)
      j_texts.push_back(v.localized ? to_string(v.localized->j_part) : std::string());
  }
  frobloc::LocusReport report;
  frobloc_ideal annihilator;
  std::vector<std::string> j_texts;
};

struct frobloc_profile {
  explicit frobloc_profile(frobloc::GenerationProfile p) : profile(std::move(p)) {
    for (const auto& f : profile.f_ideals) f_handles.push_back(std::make_unique<frobloc_ideal>(f));
    for (const auto& l : profile.l_ideals) l_handles.push_back(std::make_unique<frobloc_ideal>(l));
  }
  frobloc::GenerationProfile profile;
  std::vector<std::unique_ptr<frobloc_ideal>> f_handles;
  std::vector<std::unique_ptr<frobloc_ideal>> l_handles;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_position = 0;

frobloc_status fail(frobloc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

frobloc_status status_of(frobloc::Errc code) {
  switch (code) {
    case frobloc::Errc::ParseFailure: return FROBLOC_ERR_PARSE;
    case frobloc::Errc::ResourceLimit: return FROBLOC_ERR_RESOURCE;
    default: return FROBLOC_ERR_INVALID;
  }
}

template <class F>
frobloc_status guarded(F&& body) {
  try {
    return body();
  } catch (const frobloc::ParseError& e) {
    last_error_position = e.position();
    return fail(FROBLOC_ERR_PARSE, e.what());
  } catch (const frobloc::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(FROBLOC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(FROBLOC_ERR_INTERNAL, e.what());
  }
}

frobloc_status null_argument() { return fail(FROBLOC_ERR_INVALID, "null argument"); }

frobloc_class to_c(frobloc::GenerationClass c) {
  switch (c) {
    case frobloc::GenerationClass::PrincipallyGenerated: return FROBLOC_PRINCIPAL;
    case frobloc::GenerationClass::InfinitelyGenerated: return FROBLOC_INFINITE;
    case frobloc::GenerationClass::Undetermined: break;
  }
  return FROBLOC_UNDETERMINED;
}

frobloc_certificate to_c(frobloc::Certificate c) {
  switch (c) {
    case frobloc::Certificate::DirectTheorem: return FROBLOC_CERT_DIRECT;
    case frobloc::Certificate::ComplementPattern: return FROBLOC_CERT_COMPLEMENT_PATTERN;
    case frobloc::Certificate::Transfer: return FROBLOC_CERT_TRANSFER;
    case frobloc::Certificate::None: break;
  }
  return FROBLOC_CERT_NONE;
}

frobloc_openness to_c(frobloc::Openness o) {
  switch (o) {
    case frobloc::Openness::Open: return FROBLOC_OPEN;
    case frobloc::Openness::NotOpen: return FROBLOC_NOT_OPEN;
    case frobloc::Openness::Unknown: break;
  }
  return FROBLOC_UNKNOWN;
}

const frobloc::SymbolicIdeal* part_of(const frobloc::ColonDecomposition& d, frobloc_part part) {
  switch (part) {
    case FROBLOC_PART_FROBENIUS: return &d.frobenius_part;
    case FROBLOC_PART_J: return &d.j_part;
    default: return nullptr;
  }
}

}  // namespace

extern "C" {

const char* frobloc_last_error(void) { return last_error.c_str(); }
size_t frobloc_last_error_position(void) { return last_error_position; }
const char* frobloc_version(void) { return "1.0.0"; }

frobloc_status frobloc_ideal_parse(const char* text, uint32_t nvars, frobloc_ideal** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    std::optional<std::size_t> n;
    if (nvars != 0) n = nvars;
    *out = new frobloc_ideal(frobloc::parse_ideal(text, n).to_ideal());
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_ideal_from_exponents(uint32_t nvars, size_t ngens, const uint32_t* exps, frobloc_ideal** out) {
  if (!out || (ngens > 0 && !exps)) return null_argument();
  return guarded([&] {
    std::vector<frobloc::Monomial> gens;
    for (size_t g = 0; g < ngens; ++g)
      gens.emplace_back(std::vector<frobloc::Exponent>(exps + g * nvars, exps + (g + 1) * nvars));
    *out = new frobloc_ideal(frobloc::MonomialIdeal(nvars, std::move(gens)));
    return FROBLOC_OK;
  });
}

void frobloc_ideal_free(frobloc_ideal* ideal) { delete ideal; }

uint32_t frobloc_ideal_nvars(const frobloc_ideal* ideal) {
  return ideal ? static_cast<uint32_t>(ideal->ideal.nvars()) : 0;
}

size_t frobloc_ideal_ngens(const frobloc_ideal* ideal) { return ideal ? ideal->ideal.size() : 0; }

frobloc_status frobloc_ideal_generator(const frobloc_ideal* ideal, size_t index, uint32_t* out_exps) {
  if (!ideal || !out_exps) return null_argument();
  if (index >= ideal->ideal.size()) return fail(FROBLOC_ERR_INVALID, "generator index out of range");
  const auto exps = ideal->ideal.generators()[index].exponents();
  std::copy(exps.begin(), exps.end(), out_exps);
  return FROBLOC_OK;
}

const char* frobloc_ideal_text(const frobloc_ideal* ideal) { return ideal ? ideal->text.c_str() : ""; }

int frobloc_ideal_equal(const frobloc_ideal* a, const frobloc_ideal* b) {
  return a && b && a->ideal == b->ideal;
}

frobloc_status frobloc_ideal_contains(const frobloc_ideal* ideal, const uint32_t* exps, int* out) {
  if (!ideal || !exps || !out) return null_argument();
  return guarded([&] {
    const auto n = ideal->ideal.nvars();
    *out = ideal->ideal.contains(frobloc::Monomial(std::vector<frobloc::Exponent>(exps, exps + n)));
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_validate_square_free(const frobloc_ideal* ideal) {
  if (!ideal) return null_argument();
  return guarded([&] {
    frobloc::validate_square_free(ideal->ideal);
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_frobenius_power(const frobloc_ideal* ideal, uint32_t p, uint32_t e, frobloc_ideal** out) {
  if (!ideal || !out) return null_argument();
  return guarded([&] {
    *out = new frobloc_ideal(frobloc::frobenius_power(ideal->ideal, frobloc::FrobeniusExponent(p, e)));
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_colon(const frobloc_ideal* j, const frobloc_ideal* i, frobloc_ideal** out) {
  if (!j || !i || !out) return null_argument();
  return guarded([&] {
    *out = new frobloc_ideal(frobloc::colon(j->ideal, i->ideal));
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_frobenius_colon(const frobloc_ideal* ideal, uint32_t p, uint32_t e, frobloc_ideal** out) {
  if (!ideal || !out) return null_argument();
  return guarded([&] {
    *out = new frobloc_ideal(frobloc::compute_F(ideal->ideal, p, e));
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_decompose(const frobloc_ideal* ideal, uint32_t p, frobloc_decomposition** out) {
  if (!ideal || !out) return null_argument();
  return guarded([&] {
    *out = new frobloc_decomposition(frobloc::decompose(frobloc::validate_square_free(ideal->ideal), p));
    return FROBLOC_OK;
  });
}

void frobloc_decomposition_free(frobloc_decomposition* d) { delete d; }

uint32_t frobloc_decomposition_nvars(const frobloc_decomposition* d) {
  return d ? static_cast<uint32_t>(d->decomposition.beta.size()) : 0;
}

uint32_t frobloc_decomposition_p(const frobloc_decomposition* d) { return d ? d->decomposition.p : 0; }

void frobloc_decomposition_beta(const frobloc_decomposition* d, uint8_t* out) {
  if (!d || !out) return;
  std::copy(d->decomposition.beta.begin(), d->decomposition.beta.end(), out);
}

size_t frobloc_decomposition_part_size(const frobloc_decomposition* d, frobloc_part part) {
  if (!d) return 0;
  if (part == FROBLOC_PART_SOCLE) return 1;
  const auto* s = part_of(d->decomposition, part);
  return s ? s->size() : 0;
}

frobloc_status frobloc_decomposition_part_generator(const frobloc_decomposition* d, frobloc_part part, size_t index,
                                                    frobloc_sym_exponent* out) {
  if (!d || !out) return null_argument();
  frobloc::SymbolicMonomial g;
  if (part == FROBLOC_PART_SOCLE) {
    if (index != 0) return fail(FROBLOC_ERR_INVALID, "generator index out of range");
    g = d->decomposition.socle();
  } else {
    const auto* s = part_of(d->decomposition, part);
    if (!s) return fail(FROBLOC_ERR_INVALID, "no such decomposition part");
    if (index >= s->size()) return fail(FROBLOC_ERR_INVALID, "generator index out of range");
    g = s->generators()[index];
  }
  for (std::size_t i = 0; i < g.nvars(); ++i) out[i] = {g[i].slope, g[i].offset};
  return FROBLOC_OK;
}

const char* frobloc_decomposition_part_text(const frobloc_decomposition* d, frobloc_part part) {
  if (!d) return "";
  switch (part) {
    case FROBLOC_PART_FROBENIUS: return d->frobenius_text.c_str();
    case FROBLOC_PART_J: return d->j_text.c_str();
    case FROBLOC_PART_SOCLE: return d->socle_text.c_str();
    default: return "";
  }
}

frobloc_status frobloc_decomposition_instantiate(const frobloc_decomposition* d, frobloc_part part, uint32_t e,
                                                 frobloc_ideal** out) {
  if (!d || !out) return null_argument();
  return guarded([&] {
    const auto parts = frobloc::instantiate(d->decomposition, e);
    switch (part) {
      case FROBLOC_PART_FROBENIUS: *out = new frobloc_ideal(parts.frobenius_part); break;
      case FROBLOC_PART_J: *out = new frobloc_ideal(parts.j_part); break;
      case FROBLOC_PART_SOCLE: *out = new frobloc_ideal(parts.socle); break;
      case FROBLOC_PART_ALL: *out = new frobloc_ideal(parts.combined()); break;
      default: return fail(FROBLOC_ERR_INVALID, "no such decomposition part");
    }
    return FROBLOC_OK;
  });
}

frobloc_class frobloc_decomposition_class(const frobloc_decomposition* d) {
  if (!d) return FROBLOC_UNDETERMINED;
  return to_c(frobloc::classify_global(d->decomposition).generation);
}

frobloc_status frobloc_u_prime(const frobloc_decomposition* d, frobloc_ideal** out) {
  if (!d || !out) return null_argument();
  return guarded([&] {
    *out = new frobloc_ideal(frobloc::compute_u_prime(d->decomposition));
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_locus_build(const frobloc_ideal* ideal, uint32_t p, const frobloc_locus_options* options,
                                   frobloc_locus** out) {
  if (!ideal || !out) return null_argument();
  return guarded([&] {
    frobloc::LocusOptions opts;
    if (options) {
      opts.mode = options->strict ? frobloc::LocusMode::Strict : frobloc::LocusMode::Default;
      opts.ambient = options->full_spectrum ? frobloc::Ambient::Full : frobloc::Ambient::VI;
    }
    *out = new frobloc_locus(frobloc::build_locus(frobloc::validate_square_free(ideal->ideal), p, opts));
    return FROBLOC_OK;
  });
}

void frobloc_locus_free(frobloc_locus* locus) { delete locus; }

size_t frobloc_locus_stratum_count(const frobloc_locus* locus) { return locus ? locus->report.verdicts.size() : 0; }

frobloc_status frobloc_locus_stratum(const frobloc_locus* locus, size_t index, frobloc_stratum_info* out) {
  if (!locus || !out) return null_argument();
  if (index >= locus->report.verdicts.size()) return fail(FROBLOC_ERR_INVALID, "stratum index out of range");
  const auto& v = locus->report.verdicts[index];
  out->in_prime = v.stratum.in_prime;
  out->generation = v.in_support ? to_c(v.generation) : FROBLOC_OUTSIDE;
  out->certificate = to_c(v.certificate);
  return FROBLOC_OK;
}

const char* frobloc_locus_stratum_j_text(const frobloc_locus* locus, size_t index) {
  if (!locus || index >= locus->j_texts.size()) return "";
  return locus->j_texts[index].c_str();
}

frobloc_openness frobloc_locus_openness(const frobloc_locus* locus) {
  return locus ? to_c(locus->report.openness) : FROBLOC_UNKNOWN;
}

const char* frobloc_locus_expression_text(const frobloc_locus* locus, frobloc_locus_expression which) {
  if (!locus) return "";
  switch (which) {
    case FROBLOC_EXPR_U: return locus->report.u_expression.c_str();
    case FROBLOC_EXPR_COMPLEMENT: return locus->report.complement_expression.c_str();
    case FROBLOC_EXPR_U_PRIME: return locus->report.u_prime_expression.c_str();
  }
  return "";
}

const frobloc_ideal* frobloc_locus_u_prime_annihilator(const frobloc_locus* locus) {
  return locus ? &locus->annihilator : nullptr;
}

frobloc_status frobloc_locus_check_u(frobloc_locus* locus, const char* expression, int* matches) {
  if (!locus || !expression || !matches) return null_argument();
  return guarded([&] {
    *matches = frobloc::check_u_expression(locus->report, expression);
    return FROBLOC_OK;
  });
}

size_t frobloc_locus_note_count(const frobloc_locus* locus) { return locus ? locus->report.notes.size() : 0; }

const char* frobloc_locus_note(const frobloc_locus* locus, size_t index) {
  if (!locus || index >= locus->report.notes.size()) return "";
  return locus->report.notes[index].c_str();
}

frobloc_status frobloc_is_open(const frobloc_ideal* ideal, const uint8_t* inside, const uint8_t* undetermined,
                               int full_spectrum, frobloc_openness* out) {
  if (!ideal || !inside || !out) return null_argument();
  return guarded([&] {
    const std::size_t n = ideal->ideal.nvars();
    frobloc::StrataSet in(n), und(n), domain(n);
    for (frobloc::VarSet z = 0; z < in.universe_size(); ++z) {
      if (inside[z]) in.insert(z);
      if (undetermined && undetermined[z]) und.insert(z);
      if (full_spectrum || frobloc::is_admissible(ideal->ideal, z)) domain.insert(z);
    }
    *out = to_c(frobloc::is_open(in, und, domain));
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_oracle_run(const frobloc_ideal* ideal, uint32_t p, uint32_t max_e, uint64_t max_generators,
                                  frobloc_profile** out) {
  if (!ideal || !out) return null_argument();
  return guarded([&] {
    const auto bound = max_generators ? max_generators : frobloc::kDefaultMaxGenerators;
    *out = new frobloc_profile(frobloc::classify_up_to(ideal->ideal, p, max_e, bound));
    return FROBLOC_OK;
  });
}

void frobloc_profile_free(frobloc_profile* profile) { delete profile; }

uint32_t frobloc_profile_max_e(const frobloc_profile* profile) { return profile ? profile->profile.max_e : 0; }

int frobloc_profile_needs_new(const frobloc_profile* profile, uint32_t e) {
  if (!profile || e == 0 || e > profile->profile.needs_new.size()) return 0;
  return profile->profile.needs_new[e - 1];
}

int frobloc_profile_consistent(const frobloc_profile* profile) {
  return profile && profile->profile.finitely_generated_consistent();
}

const frobloc_ideal* frobloc_profile_F(const frobloc_profile* profile, uint32_t e) {
  if (!profile || e == 0 || e > profile->f_handles.size()) return nullptr;
  return profile->f_handles[e - 1].get();
}

const frobloc_ideal* frobloc_profile_L(const frobloc_profile* profile, uint32_t e) {
  if (!profile || e == 0 || e > profile->l_handles.size()) return nullptr;
  return profile->l_handles[e - 1].get();
}

frobloc_status frobloc_cross_check(const frobloc_ideal* ideal, uint32_t p, uint32_t max_e, uint64_t max_generators,
                                   size_t* disagreements) {
  if (!ideal || !disagreements) return null_argument();
  return guarded([&] {
    const auto bound = max_generators ? max_generators : frobloc::kDefaultMaxGenerators;
    *disagreements = frobloc::cross_check(frobloc::validate_square_free(ideal->ideal), p, max_e, bound).size();
    return FROBLOC_OK;
  });
}

frobloc_status frobloc_enumerate(uint32_t nvars, uint32_t p, const frobloc_enumeration_options* options,
                                 frobloc_enumeration_visitor visit, void* user, frobloc_enumeration_summary* out) {
  if (!out) return null_argument();
  return guarded([&] {
    frobloc::EnumerationOptions opts;
    if (options) {
      opts.check = options->check != 0;
      opts.mode = options->strict ? frobloc::LocusMode::Strict : frobloc::LocusMode::Default;
      if (options->max_e) opts.max_e = options->max_e;
      if (options->max_generators) opts.max_generators = options->max_generators;
    }
    std::function<void(const frobloc::EnumerationEntry&)> forward;
    if (visit) {
      forward = [&](const frobloc::EnumerationEntry& entry) {
        const frobloc_ideal handle(entry.ideal->ideal.ideal());
        visit(&handle, entry.ideal->orbit_size, to_c(entry.generation), to_c(entry.openness), entry.disagreements, user);
      };
    }
    const auto s = frobloc::enumerate_ideals(nvars, p, opts, forward);
    *out = {s.representatives, s.ideals,        s.principal,         s.infinite, s.principal_orbits, s.infinite_orbits,
            s.open,            s.not_open,      s.unknown,           s.disagreements};
    return FROBLOC_OK;
  });
}

}  // extern "C"
