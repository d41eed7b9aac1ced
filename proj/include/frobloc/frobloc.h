#ifndef FROBLOC_FROBLOC_H
#define FROBLOC_FROBLOC_H

/*
 * C interface to the frobloc library: Frobenius powers and colon ideals of
 * square-free monomial ideals, the structure of (I^[q] : I), and the
 * finitely generated locus of the associated Frobenius algebra.
 *
 * All objects are opaque handles released with the matching *_free function.
 * Functions returning frobloc_status leave a message for frobloc_last_error()
 * on failure; the message is thread-local and valid until the next failing call
 * on the same thread. Strings returned by accessors are owned by the handle.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FROBLOC_BUILDING)
#    define FROBLOC_API __declspec(dllexport)
#  else
#    define FROBLOC_API __declspec(dllimport)
#  endif
#else
#  define FROBLOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the CLI exit codes. */
typedef enum frobloc_status {
  FROBLOC_OK = 0,
  FROBLOC_ERR_INTERNAL = 1,
  FROBLOC_ERR_PARSE = 2,
  FROBLOC_ERR_INVALID = 3,
  FROBLOC_ERR_DISAGREEMENT = 4,
  FROBLOC_ERR_RESOURCE = 5
} frobloc_status;

typedef enum frobloc_class {
  FROBLOC_PRINCIPAL = 0,
  FROBLOC_INFINITE = 1,
  FROBLOC_UNDETERMINED = 2,
  FROBLOC_OUTSIDE = 3 /* stratum outside V(I), full-spectrum reports only */
} frobloc_class;

typedef enum frobloc_certificate {
  FROBLOC_CERT_DIRECT = 0,
  FROBLOC_CERT_COMPLEMENT_PATTERN = 1,
  FROBLOC_CERT_TRANSFER = 2,
  FROBLOC_CERT_NONE = 3
} frobloc_certificate;

typedef enum frobloc_openness { FROBLOC_OPEN = 0, FROBLOC_NOT_OPEN = 1, FROBLOC_UNKNOWN = 2 } frobloc_openness;

typedef enum frobloc_part {
  FROBLOC_PART_FROBENIUS = 0,
  FROBLOC_PART_J = 1,
  FROBLOC_PART_SOCLE = 2,
  FROBLOC_PART_ALL = 3 /* instantiate only: the whole colon ideal */
} frobloc_part;

/* slope * q + offset */
typedef struct frobloc_sym_exponent {
  uint32_t slope;
  int64_t offset;
} frobloc_sym_exponent;

typedef struct frobloc_ideal frobloc_ideal;
typedef struct frobloc_decomposition frobloc_decomposition;
typedef struct frobloc_locus frobloc_locus;
typedef struct frobloc_profile frobloc_profile;

FROBLOC_API const char* frobloc_last_error(void);
/* Character offset of the last parse failure on this thread. */
FROBLOC_API size_t frobloc_last_error_position(void);
FROBLOC_API const char* frobloc_version(void);

/* ---- ideals ---------------------------------------------------------- */

/* nvars == 0 infers the variable count from the largest index. */
FROBLOC_API frobloc_status frobloc_ideal_parse(const char* text, uint32_t nvars, frobloc_ideal** out);
/* exps holds ngens rows of nvars exponents. */
FROBLOC_API frobloc_status frobloc_ideal_from_exponents(uint32_t nvars, size_t ngens, const uint32_t* exps,
                                                        frobloc_ideal** out);
FROBLOC_API void frobloc_ideal_free(frobloc_ideal* ideal);

FROBLOC_API uint32_t frobloc_ideal_nvars(const frobloc_ideal* ideal);
/* Minimal generators, descending lexicographic order. */
FROBLOC_API size_t frobloc_ideal_ngens(const frobloc_ideal* ideal);
FROBLOC_API frobloc_status frobloc_ideal_generator(const frobloc_ideal* ideal, size_t index, uint32_t* out_exps);
FROBLOC_API const char* frobloc_ideal_text(const frobloc_ideal* ideal);
FROBLOC_API int frobloc_ideal_equal(const frobloc_ideal* a, const frobloc_ideal* b);
FROBLOC_API frobloc_status frobloc_ideal_contains(const frobloc_ideal* ideal, const uint32_t* exps, int* out);

FROBLOC_API frobloc_status frobloc_validate_square_free(const frobloc_ideal* ideal);
FROBLOC_API frobloc_status frobloc_frobenius_power(const frobloc_ideal* ideal, uint32_t p, uint32_t e,
                                                   frobloc_ideal** out);
FROBLOC_API frobloc_status frobloc_colon(const frobloc_ideal* j, const frobloc_ideal* i, frobloc_ideal** out);
/* (I^[p^e] : I) computed concretely. */
FROBLOC_API frobloc_status frobloc_frobenius_colon(const frobloc_ideal* ideal, uint32_t p, uint32_t e,
                                                   frobloc_ideal** out);

/* ---- decomposition --------------------------------------------------- */

FROBLOC_API frobloc_status frobloc_decompose(const frobloc_ideal* ideal, uint32_t p, frobloc_decomposition** out);
FROBLOC_API void frobloc_decomposition_free(frobloc_decomposition* d);

FROBLOC_API uint32_t frobloc_decomposition_nvars(const frobloc_decomposition* d);
FROBLOC_API uint32_t frobloc_decomposition_p(const frobloc_decomposition* d);
/* Writes nvars 0/1 entries. */
FROBLOC_API void frobloc_decomposition_beta(const frobloc_decomposition* d, uint8_t* out);
FROBLOC_API size_t frobloc_decomposition_part_size(const frobloc_decomposition* d, frobloc_part part);
/* Writes nvars symbolic exponents of generator `index` of `part`. */
FROBLOC_API frobloc_status frobloc_decomposition_part_generator(const frobloc_decomposition* d, frobloc_part part,
                                                                size_t index, frobloc_sym_exponent* out);
FROBLOC_API const char* frobloc_decomposition_part_text(const frobloc_decomposition* d, frobloc_part part);
FROBLOC_API frobloc_status frobloc_decomposition_instantiate(const frobloc_decomposition* d, frobloc_part part,
                                                             uint32_t e, frobloc_ideal** out);
FROBLOC_API frobloc_class frobloc_decomposition_class(const frobloc_decomposition* d);
/* Ann((I^[p] + J_p) / I^[p]); U' is the complement of its zero set in V(I). */
FROBLOC_API frobloc_status frobloc_u_prime(const frobloc_decomposition* d, frobloc_ideal** out);

/* ---- locus ----------------------------------------------------------- */

typedef struct frobloc_locus_options {
  int strict;        /* nonzero: strata without the {0, p-1, p} pattern stay undetermined */
  int full_spectrum; /* nonzero: include strata outside V(I) */
} frobloc_locus_options;

typedef struct frobloc_stratum_info {
  uint32_t in_prime; /* bit i set <=> x_{i+1} lies in the prime */
  frobloc_class generation;
  frobloc_certificate certificate;
} frobloc_stratum_info;

typedef enum frobloc_locus_expression {
  FROBLOC_EXPR_U = 0,
  FROBLOC_EXPR_COMPLEMENT = 1,
  FROBLOC_EXPR_U_PRIME = 2
} frobloc_locus_expression;

FROBLOC_API frobloc_status frobloc_locus_build(const frobloc_ideal* ideal, uint32_t p,
                                               const frobloc_locus_options* options, frobloc_locus** out);
FROBLOC_API void frobloc_locus_free(frobloc_locus* locus);

FROBLOC_API size_t frobloc_locus_stratum_count(const frobloc_locus* locus);
FROBLOC_API frobloc_status frobloc_locus_stratum(const frobloc_locus* locus, size_t index, frobloc_stratum_info* out);
/* Text rendering of the localized J part of stratum `index` ("" outside V(I)). */
FROBLOC_API const char* frobloc_locus_stratum_j_text(const frobloc_locus* locus, size_t index);
FROBLOC_API frobloc_openness frobloc_locus_openness(const frobloc_locus* locus);
FROBLOC_API const char* frobloc_locus_expression_text(const frobloc_locus* locus, frobloc_locus_expression which);
FROBLOC_API const frobloc_ideal* frobloc_locus_u_prime_annihilator(const frobloc_locus* locus);
/* Compares U with a D(.)/V(.) expression; a mismatch adds a note. */
FROBLOC_API frobloc_status frobloc_locus_check_u(frobloc_locus* locus, const char* expression, int* matches);
FROBLOC_API size_t frobloc_locus_note_count(const frobloc_locus* locus);
FROBLOC_API const char* frobloc_locus_note(const frobloc_locus* locus, size_t index);

/* Openness of an explicit stratum family. inside/undetermined are arrays of 2^nvars
 * flags; full_spectrum == 0 restricts the ambient space to the strata of V(ideal). */
FROBLOC_API frobloc_status frobloc_is_open(const frobloc_ideal* ideal, const uint8_t* inside,
                                           const uint8_t* undetermined, int full_spectrum, frobloc_openness* out);

/* ---- generation oracle ---------------------------------------------- */

/* max_generators == 0 selects the default bound. */
FROBLOC_API frobloc_status frobloc_oracle_run(const frobloc_ideal* ideal, uint32_t p, uint32_t max_e,
                                              uint64_t max_generators, frobloc_profile** out);
FROBLOC_API void frobloc_profile_free(frobloc_profile* profile);
FROBLOC_API uint32_t frobloc_profile_max_e(const frobloc_profile* profile);
FROBLOC_API int frobloc_profile_needs_new(const frobloc_profile* profile, uint32_t e);
FROBLOC_API int frobloc_profile_consistent(const frobloc_profile* profile);
FROBLOC_API const frobloc_ideal* frobloc_profile_F(const frobloc_profile* profile, uint32_t e);
FROBLOC_API const frobloc_ideal* frobloc_profile_L(const frobloc_profile* profile, uint32_t e);

/* Number of admissible strata where the locus classifier and the oracle disagree. */
FROBLOC_API frobloc_status frobloc_cross_check(const frobloc_ideal* ideal, uint32_t p, uint32_t max_e,
                                               uint64_t max_generators, size_t* disagreements);

/* ---- enumeration ----------------------------------------------------- */

typedef struct frobloc_enumeration_options {
  int check;
  int strict;
  uint32_t max_e;
  uint64_t max_generators;
} frobloc_enumeration_options;

typedef struct frobloc_enumeration_summary {
  uint64_t representatives;
  uint64_t ideals;
  uint64_t principal;
  uint64_t infinite;
  uint64_t principal_orbits;
  uint64_t infinite_orbits;
  uint64_t open;
  uint64_t not_open;
  uint64_t unknown;
  uint64_t disagreements;
} frobloc_enumeration_summary;

/* The ideal handle passed to the callback is only valid during the call. */
typedef void (*frobloc_enumeration_visitor)(const frobloc_ideal* ideal, uint64_t orbit_size, frobloc_class generation,
                                            frobloc_openness openness, uint64_t disagreements, void* user);

FROBLOC_API frobloc_status frobloc_enumerate(uint32_t nvars, uint32_t p, const frobloc_enumeration_options* options,
                                             frobloc_enumeration_visitor visit, void* user,
                                             frobloc_enumeration_summary* out);

#ifdef __cplusplus
}
#endif

#endif /* FROBLOC_FROBLOC_H */
