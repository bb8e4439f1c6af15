#ifndef SKEIN_SKEIN_H_
#define SKEIN_SKEIN_H_

/*
 * C interface to the skein algebra library.
 *
 * Every entry point returns a skein_status. On failure the out-parameter is
 * left untouched and skein_last_error() describes the problem (per thread,
 * valid until the next call on that thread). Parse errors carry a column and
 * a caret line.
 *
 * Computations produce a skein_result holding a plain-text rendering, a JSON
 * document and, for checks, a verdict. Strings returned by accessors are
 * owned by the result.
 */

#include <stdint.h>

#if defined(_WIN32)
#define SKEIN_API __declspec(dllexport)
#else
#define SKEIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skein_status {
  SKEIN_OK = 0,
  SKEIN_ERR_INVALID_ARGUMENT = 1,
  SKEIN_ERR_PARSE = 2,
  SKEIN_ERR_NOT_NORMALIZED = 3,
  SKEIN_ERR_NO_PRODUCT_RULE = 4,
  SKEIN_ERR_FLAVOR_MISMATCH = 5,
  SKEIN_ERR_OUT_OF_RANGE = 6,
  SKEIN_ERR_IO = 7,
  SKEIN_ERR_INTERNAL = 8
} skein_status;

typedef enum skein_verdict {
  SKEIN_VERDICT_NONE = 0,
  SKEIN_VERDICT_CERTIFIED = 1,
  SKEIN_VERDICT_VIOLATION = 2
} skein_verdict;

typedef struct skein_seq skein_seq;
typedef struct skein_result skein_result;

SKEIN_API const char* skein_last_error(void);
SKEIN_API const char* skein_status_name(skein_status status);
SKEIN_API const char* skein_version(void);

/* Sequences: "monomial", "that", "s", "t" or "file:PATH". */
SKEIN_API skein_status skein_seq_open(const char* spec, skein_seq** out);
SKEIN_API void skein_seq_free(skein_seq* seq);
SKEIN_API const char* skein_seq_name(const skein_seq* seq);
SKEIN_API const char* skein_seq_display_name(const skein_seq* seq);

SKEIN_API const char* skein_result_text(const skein_result* result);
SKEIN_API const char* skein_result_json(const skein_result* result);
SKEIN_API skein_verdict skein_result_verdict(const skein_result* result);
SKEIN_API void skein_result_free(skein_result* result);

/* Closed torus. Labels "(r,s)", "(r,s)_T" or "1"; basis must be normalized.
 * With q1 != 0 coefficients are specialized to q = 1. */
SKEIN_API skein_status skein_tor_mul(const char* a, const char* b, const skein_seq* basis, int q1,
                                     skein_result** out);
SKEIN_API skein_status skein_tor_scan(const skein_seq* basis, int bound, int q1, skein_result** out);

/* Once-punctured torus. Labels like "T(3,1)", "(0,1)*U^2", "U", "1". */
SKEIN_API skein_status skein_ptor_mul(const char* a, const char* b, const skein_seq* basis, skein_result** out);
/* check: "g-closed", "induction" or "extract" (the last in the S basis). */
SKEIN_API skein_status skein_ptor_verify(const char* check, int n_max, skein_result** out);
SKEIN_API skein_status skein_ptor_extract(const skein_seq* seq, int n, skein_result** out);

/* Four-punctured sphere. Labels like "S(2,1)", "(1,0)*g1*g2", "g3^2", "1". */
SKEIN_API skein_status skein_s04_mul(const char* a, const char* b, const skein_seq* basis, skein_result** out);
/* check: "h-bounds" or "lowest-term". */
SKEIN_API skein_status skein_s04_verify(const char* check, int n_max, skein_result** out);
SKEIN_API skein_status skein_s04_extract(int n, skein_result** out);
SKEIN_API skein_status skein_s04_force_p1(int64_t delta, skein_result** out);

SKEIN_API skein_status skein_certify_torus_unique(int n_max, int box, skein_result** out);
SKEIN_API skein_status skein_certify_sandwich(const skein_seq* seq, int n_max, skein_result** out);

/* Member n of a sequence, and its value at x = t + 1/t when q-free. */
SKEIN_API skein_status skein_cheb(const skein_seq* seq, int n, skein_result** out);
/* (P) <= (Q) up to n_max. */
SKEIN_API skein_status skein_order_leq(const skein_seq* p, const skein_seq* q, int n_max, int q1,
                                       skein_result** out);

/* Parses an element JSON document and re-emits it in canonical form. */
SKEIN_API skein_status skein_element_read(const char* json, skein_result** out);

#ifdef __cplusplus
}
#endif

#endif /* SKEIN_SKEIN_H_ */
