/*
 * C interface to the artin library: finite-dimensional commutative algebras
 * over Q, their Kahler differentials, truncated valuations and witness
 * checks.
 *
 * Objects are opaque handles created by artin_*_create/parse functions and
 * released with the matching *_free function. Every fallible call returns
 * an artin_status; on failure a description is available from
 * artin_last_error() on the calling thread.
 */
#ifndef ARTIN_ARTIN_H
#define ARTIN_ARTIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(ARTIN_BUILDING_LIBRARY)
#define ARTIN_API __attribute__((visibility("default")))
#else
#define ARTIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum artin_status {
  ARTIN_OK = 0,
  ARTIN_E_PARSE = 1,
  ARTIN_E_VARIABLE_MISMATCH = 2,
  ARTIN_E_NOT_ZERO_DIMENSIONAL = 3,
  ARTIN_E_TRIVIAL_ALGEBRA = 4,
  ARTIN_E_NOT_LOCAL = 5,
  ARTIN_E_NOT_GRADED = 6,
  ARTIN_E_PRINCIPAL = 7,
  ARTIN_E_NOT_GORENSTEIN = 8,
  ARTIN_E_RELATION_VIOLATED = 9,
  ARTIN_E_DEPENDENT_INPUT = 10,
  ARTIN_E_WITNESS_INSUFFICIENT = 11,
  ARTIN_E_NOT_DEGREE_ONE = 12,
  ARTIN_E_INCOMPATIBLE = 13,
  ARTIN_E_INVALID_ARGUMENT = 14,
  ARTIN_E_BUDGET = 15,
  ARTIN_E_INTERNAL = 99
} artin_status;

typedef struct artin_algebra artin_algebra;
typedef struct artin_report artin_report;

/* Options for artin_run. Zero-initialize, then call artin_run_options_init
 * to get the defaults (nmax 12, budget 500, seed 1, both search
 * strategies). String fields may be NULL. */
typedef struct artin_run_options {
  unsigned nmax;
  size_t budget;
  uint64_t seed;
  /* Comma-separated: "monomial", "dense-random", "user". */
  const char *strategy;
  /* Polynomial expression for the tau witness element. */
  const char *witness;
  /* ';'-separated images in t, one per variable (user strategy). */
  const char *images;
  /* Critical degree override for tau; 0 means search. */
  unsigned r;
} artin_run_options;

ARTIN_API void artin_run_options_init(artin_run_options *opts);

ARTIN_API const char *artin_status_string(artin_status status);
ARTIN_API const char *artin_last_error(void);
ARTIN_API const char *artin_version(void);

/* Algebra from the text file format ("vars: ...", "gens: ..."). */
ARTIN_API artin_status artin_algebra_parse(const char *text, artin_algebra **out);
/* Algebra from a space-separated variable list and ';'-separated generators. */
ARTIN_API artin_status artin_algebra_create(const char *vars, const char *gens, artin_algebra **out);
ARTIN_API void artin_algebra_free(artin_algebra *alg);

ARTIN_API size_t artin_algebra_dim(const artin_algebra *alg);
ARTIN_API size_t artin_algebra_nvars(const artin_algebra *alg);
/* Basis monomial `index` as text, e.g. "X^2*Y". The pointer stays valid
 * while the algebra lives. NULL if out of range. */
ARTIN_API const char *artin_algebra_basis_monomial(const artin_algebra *alg, size_t index);

/* Normal form of a polynomial modulo the ideal. The result string must be
 * released with artin_string_free. */
ARTIN_API artin_status artin_normal_form(const artin_algebra *alg, const char *poly, char **out);
/* Reports whether the polynomial lies in the ideal. */
ARTIN_API artin_status artin_ideal_contains(const artin_algebra *alg, const char *poly, int *out);
/* Socle dimension (ARTIN_E_NOT_LOCAL for non-local input). */
ARTIN_API artin_status artin_socle_dim(const artin_algebra *alg, size_t *out);
ARTIN_API artin_status artin_kahler_dim(const artin_algebra *alg, size_t *out);
/* Whether d(poly) vanishes in Omega_A. */
ARTIN_API artin_status artin_differential_is_zero(const artin_algebra *alg, const char *poly, int *out);

ARTIN_API void artin_string_free(char *s);

/* Runs one of "analyze", "homs", "critdeg", "tau", "socle-kill". A report
 * is produced even when the computation itself fails; the return value is
 * ARTIN_OK whenever a report was produced. */
ARTIN_API artin_status artin_run(const artin_algebra *alg, const char *command, const artin_run_options *opts,
                                 artin_report **out);
ARTIN_API const char *artin_report_json(const artin_report *report);
ARTIN_API const char *artin_report_text(const artin_report *report);
/* 0 success, 2 input error, 3 invariant violation, 4 budget exhausted. */
ARTIN_API int artin_report_exit_code(const artin_report *report);
ARTIN_API void artin_report_free(artin_report *report);

#ifdef __cplusplus
}
#endif

#endif /* ARTIN_ARTIN_H */
