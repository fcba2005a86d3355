#ifndef SONCOUP_H
#define SONCOUP_H

/* C interface to the SO(n) coupling-coefficient library.
 *
 * Every computing function returns a soncoup_status. On failure the message
 * is available from soncoup_last_error() on the same thread until the next
 * call. Values come back as opaque handles owned by the caller; strings
 * returned through char** are owned by the caller as well. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SONCOUP_API __declspec(dllexport)
#else
#define SONCOUP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum soncoup_status {
  SONCOUP_OK = 0,
  SONCOUP_ERR_INVALID_ARGUMENT = 1,
  /* A rational function was evaluated at a pole. */
  SONCOUP_ERR_POLE = 2,
  /* 6j-symbol requested where a triad fails or a 3j-symbol vanishes. */
  SONCOUP_ERR_UNDEFINED = 3,
  SONCOUP_ERR_GAMMA_RESIDUE = 4,
  SONCOUP_ERR_RESOLUTION = 5,
  SONCOUP_ERR_PARSE = 6,
  SONCOUP_ERR_INTERNAL = 7
} soncoup_status;

typedef enum soncoup_value_kind {
  /* Rational function of n. */
  SONCOUP_VALUE_RATFUNC = 0,
  /* Exact rational number. */
  SONCOUP_VALUE_RATIONAL = 1,
  /* sign * sqrt(radicand) with rational radicand. */
  SONCOUP_VALUE_SQRT_RATIONAL = 2
} soncoup_value_kind;

typedef struct soncoup_value soncoup_value;

/* Pass as n to request a symbolic result. Any n >= 1 selects fixed n. */
#define SONCOUP_SYMBOLIC 0L

/* labels[6] = {l1, l2, l3, l4, l5, l6}. */
SONCOUP_API soncoup_status soncoup_i_alpha(const int labels[6], long n, soncoup_value** out);
SONCOUP_API soncoup_status soncoup_c_alpha(const int labels[6], long n, soncoup_value** out);
SONCOUP_API soncoup_status soncoup_sixj_squared(const int labels[6], long n, soncoup_value** out);
/* Fixed n only; yields a SONCOUP_VALUE_SQRT_RATIONAL. */
SONCOUP_API soncoup_status soncoup_sixj(const int labels[6], long n, soncoup_value** out);
/* 3j-symbol square of SO(n + shift); shift even and >= 0. */
SONCOUP_API soncoup_status soncoup_threej_squared(const int triad[3], int shift, long n, soncoup_value** out);
SONCOUP_API soncoup_status soncoup_g_reduced(int j1, int j2, int j3, int m, long n, soncoup_value** out);
SONCOUP_API soncoup_status soncoup_dim(int l, long n, soncoup_value** out);

/* Reads a rational function such as "4 (n-2)/((n-1) n^3)". */
SONCOUP_API soncoup_status soncoup_parse_ratfunc(const char* text, soncoup_value** out);

SONCOUP_API soncoup_value_kind soncoup_value_get_kind(const soncoup_value* v);
SONCOUP_API int soncoup_value_is_zero(const soncoup_value* v);
/* 1 when both values have the same kind and are exactly equal. */
SONCOUP_API int soncoup_value_equal(const soncoup_value* a, const soncoup_value* b);
/* Value of a rational function at integer n; rationals are copied. */
SONCOUP_API soncoup_status soncoup_value_evaluate(const soncoup_value* v, long n, soncoup_value** out);
/* Factored display form, e.g. "4*(n-2)/((n-1)*n^3*(n+2)^3)" or "-6/42875". */
SONCOUP_API soncoup_status soncoup_value_to_string(const soncoup_value* v, char** out);
SONCOUP_API soncoup_status soncoup_value_to_json(const soncoup_value* v, char** out);
SONCOUP_API soncoup_status soncoup_value_to_latex(const soncoup_value* v, char** out);
/* Ascending coefficient strings of numerator and denominator, joined with
 * ';'. Rationals report themselves as a constant numerator over "1". */
SONCOUP_API soncoup_status soncoup_value_coefficients(const soncoup_value* v, char** num, char** den);
SONCOUP_API void soncoup_value_free(soncoup_value* v);
SONCOUP_API void soncoup_string_free(char* s);

SONCOUP_API int soncoup_triad_admissible(int l1, int l2, int l3);
SONCOUP_API int soncoup_labels_admissible(const int labels[6]);
/* Writes up to 24 tuples (6 ints each, sorted) to out and their count. */
SONCOUP_API soncoup_status soncoup_symmetry_orbit(const int labels[6], int out[144], size_t* count);
SONCOUP_API soncoup_status soncoup_canonical_labels(const int labels[6], int out[6]);

typedef void (*soncoup_case_callback)(const char* suite, const char* name, int passed, const char* detail,
                                      void* user);
/* Runs a named check suite; lmax < 0 selects the suite default. The
 * callback (optional) sees every case. */
SONCOUP_API soncoup_status soncoup_verify(const char* suite, int lmax, uint64_t seed, soncoup_case_callback cb,
                                          void* user, size_t* passed, size_t* failed);

/* Number of times gamma reduction has failed in this process. */
SONCOUP_API uint64_t soncoup_gamma_residue_errors(void);

SONCOUP_API const char* soncoup_last_error(void);
SONCOUP_API const char* soncoup_version(void);

#ifdef __cplusplus
}
#endif

#endif
