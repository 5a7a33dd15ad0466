/* C interface to libtorkit.
 *
 * Polynomials and verification reports are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns a torkit_status; on failure a description is available from
 * torkit_last_error() on the calling thread until the next call.
 * Strings returned through char** out-parameters are released with
 * torkit_string_free().
 */
#ifndef TORKIT_H
#define TORKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  define TORKIT_API __declspec(dllexport)
#else
#  define TORKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum torkit_status {
  TORKIT_OK = 0,
  TORKIT_E_CONTEXT_MISMATCH,
  TORKIT_E_INVALID_CONTEXT,
  TORKIT_E_MISSING_ASSIGNMENT,
  TORKIT_E_NEGATIVE_POWER,
  TORKIT_E_NON_INTEGRAL_EXPONENT,
  TORKIT_E_EXPONENT_OFF_GRID,
  TORKIT_E_ZERO_BASE,
  TORKIT_E_NOT_A_SQUARE,
  TORKIT_E_SYNTAX,
  TORKIT_E_UNKNOWN_VARIABLE,
  TORKIT_E_JSON,
  TORKIT_E_INVALID_ARGUMENT,
  TORKIT_E_NOT_INVERTIBLE,
  TORKIT_E_NOT_TWO_PARAMETER,
  TORKIT_E_ANSATZ_MISMATCH,
  TORKIT_E_EVEN_INDEX,
  TORKIT_E_UNKNOWN_FAMILY,
  TORKIT_E_UNSUPPORTED_CONVERSION,
  TORKIT_E_INTERNAL
} torkit_status;

typedef enum torkit_format {
  TORKIT_FORMAT_TEXT = 0,
  TORKIT_FORMAT_JSON = 1
} torkit_format;

typedef enum torkit_qnumber_kind {
  TORKIT_QNUMBER_SYMMETRIC = 0,     /* [n]_q */
  TORKIT_QNUMBER_TWO_PARAMETER = 1, /* [n]_{q,p} */
  TORKIT_QNUMBER_JONES = 2          /* [n]_{t^3,t} */
} torkit_qnumber_kind;

/* torkit_verify flags */
#define TORKIT_VERIFY_CORRUPT_K2 0x1u /* flip k2 of generalized-alexander (test fixture) */

typedef struct torkit_poly torkit_poly;
typedef struct torkit_report torkit_report;

TORKIT_API const char* torkit_status_name(torkit_status status);
TORKIT_API const char* torkit_last_error(void);
/* Byte offset of the last TORKIT_E_SYNTAX / TORKIT_E_UNKNOWN_VARIABLE, or -1. */
TORKIT_API long torkit_last_error_position(void);

TORKIT_API void torkit_string_free(char* s);

/* Polynomials */
TORKIT_API torkit_status torkit_poly_parse(const char* text, const char* const* vars, size_t n_vars,
                                           torkit_poly** out);
TORKIT_API torkit_status torkit_poly_from_json(const char* json, torkit_poly** out);
TORKIT_API torkit_status torkit_poly_render(const torkit_poly* p, torkit_format format, char** out);
TORKIT_API torkit_status torkit_poly_clone(const torkit_poly* p, torkit_poly** out);
TORKIT_API void torkit_poly_free(torkit_poly* p);

TORKIT_API size_t torkit_poly_term_count(const torkit_poly* p);
/* 1 if equal (same variables and terms), 0 otherwise. */
TORKIT_API int torkit_poly_equal(const torkit_poly* a, const torkit_poly* b);

TORKIT_API torkit_status torkit_poly_add(const torkit_poly* a, const torkit_poly* b, torkit_poly** out);
TORKIT_API torkit_status torkit_poly_mul(const torkit_poly* a, const torkit_poly* b, torkit_poly** out);
TORKIT_API torkit_status torkit_poly_pow(const torkit_poly* a, unsigned e, torkit_poly** out);
TORKIT_API torkit_status torkit_poly_sqrt(const torkit_poly* a, torkit_poly** out);

/* Knot invariants */
TORKIT_API size_t torkit_family_count(void);
/* Name of the i-th registered family, or NULL when out of range. */
TORKIT_API const char* torkit_family_name(size_t i);
TORKIT_API torkit_status torkit_family_compute(const char* family, long n, torkit_poly** out);
TORKIT_API torkit_status torkit_convert(const char* from, const char* to, long n, torkit_poly** out);
TORKIT_API torkit_status torkit_qnumber(torkit_qnumber_kind kind, long n, torkit_poly** out);

/* Verification suite */
TORKIT_API torkit_status torkit_verify(long n_max, unsigned flags, torkit_report** out);
TORKIT_API void torkit_report_free(torkit_report* r);
TORKIT_API size_t torkit_report_count(const torkit_report* r);
/* 1 if every check passed. */
TORKIT_API int torkit_report_passed(const torkit_report* r);
/* Check i: name, pass flag, and a human-readable detail (scope on pass,
 * counterexample on failure). Pointers stay valid until the report is freed. */
TORKIT_API torkit_status torkit_report_check(const torkit_report* r, size_t i, const char** name,
                                             int* passed, const char** detail);

#ifdef __cplusplus
}
#endif

#endif /* TORKIT_H */
