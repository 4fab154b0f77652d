/* qlie.h - C interface of the qlie shared library.
 *
 * Exact classification toolkit for solvable quadratic Lie algebras of
 * dimension <= 6 over the Gaussian rationals. All structured data crosses
 * this boundary either as an opaque algebra handle or as a JSON string in
 * the documented file formats; scalars inside JSON are exact strings like
 * "3/2-1/3i".
 *
 * Every function returns QLIE_OK on success. On failure the out-parameters
 * are untouched and qlie_last_error() yields a message for the calling
 * thread. Strings returned through char** are owned by the caller and must
 * be released with qlie_string_free(); handles with qlie_algebra_free().
 */

#ifndef QLIE_H
#define QLIE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QLIE_API __declspec(dllexport)
#else
#define QLIE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qlie_algebra qlie_algebra; /* opaque */

typedef enum qlie_status {
  QLIE_OK = 0,
  QLIE_ERR_PARSE = 1,
  QLIE_ERR_INDEX = 2,
  QLIE_ERR_DIVISION_BY_ZERO = 3,
  QLIE_ERR_DIMENSION_MISMATCH = 4,
  QLIE_ERR_INCONSISTENT = 5,
  QLIE_ERR_SINGULAR_MAP = 6,
  QLIE_ERR_INVALID_ALGEBRA = 7,
  QLIE_ERR_NOT_SOLVABLE = 8,
  QLIE_ERR_UNSUPPORTED_DIMENSION = 9,
  QLIE_ERR_NOT_ISOTROPIC = 10,
  QLIE_ERR_DEGENERATE_FORM = 11,
  QLIE_ERR_NO_SQUARE_ROOT = 12,
  QLIE_ERR_NOT_SKEW_DERIVATION = 13,
  QLIE_ERR_NOT_SKEW = 14,
  QLIE_ERR_NOT_INNER = 15,
  QLIE_ERR_NOT_LIE_ALGEBRA = 16,
  QLIE_ERR_NO_FRAME = 17,
  QLIE_ERR_KERNEL_NOT_IN_IMAGE = 18,
  QLIE_ERR_UNEXPECTED_ORBIT = 19,
  QLIE_ERR_BAD_PARAMETER = 20,
  QLIE_ERR_RESAMPLE_EXHAUSTED = 21,
  QLIE_ERR_NOMEM = 22,
  QLIE_ERR_INTERNAL = 23
} qlie_status;

QLIE_API const char* qlie_status_name(qlie_status status);

/* Message for the most recent failure on this thread; never NULL. */
QLIE_API const char* qlie_last_error(void);

QLIE_API void qlie_string_free(char* s);
QLIE_API void qlie_algebra_free(qlie_algebra* a);

/* ---- construction and serialization ---- */

/* Parse the JSON algebra container. len may be SIZE_MAX for NUL-terminated input. */
QLIE_API qlie_status qlie_algebra_parse(const char* bytes, size_t len, qlie_algebra** out);

/* Canonical emission; byte-stable for re-emission. */
QLIE_API qlie_status qlie_algebra_write(const qlie_algebra* a, char** out_json);

/* Catalog constructors: "abelian<N>", "diamond", "g5", "g6_1", "g6_2", "g6_3".
 * lambda is a scalar string, required for g6_2, must be NULL otherwise. */
QLIE_API qlie_status qlie_catalog_make(const char* name, const char* lambda, qlie_algebra** out);

QLIE_API size_t qlie_algebra_dim(const qlie_algebra* a);

/* ---- analysis ---- */

/* Axiom report, e.g. {"valid":true,"axioms":{...},"first_failure":""}. */
QLIE_API qlie_status qlie_validate(const qlie_algebra* a, char** out_json);

/* {"dim":..,"center_dim":..,"derived_series_dims":[..],"solvable":..,"reduced":..} */
QLIE_API qlie_status qlie_info(const qlie_algebra* a, char** out_json);

/* {"components":[{"family":"...","kappa":"25/4","lambda":"2"},...]} */
QLIE_API qlie_status qlie_classify(const qlie_algebra* a, char** out_json);

/* Orthogonal indecomposable components. On success *out receives a malloc'd
 * array of *count handles; release each handle and then the array with
 * qlie_algebra_array_free. */
QLIE_API qlie_status qlie_decompose(const qlie_algebra* a, qlie_algebra*** out, size_t* count);
QLIE_API void qlie_algebra_array_free(qlie_algebra** list, size_t count);

/* Basis of the skew-symmetric derivation space as a JSON array of matrix
 * envelopes ({"dim":n,"entries":[[..]]}). */
QLIE_API qlie_status qlie_skew_derivations(const qlie_algebra* a, char** out_json);

/* ---- constructions ---- */

/* One-dimensional double extension by the skew derivation in matrix_json. */
QLIE_API qlie_status qlie_double_extension(const qlie_algebra* a, const char* matrix_json,
                                           qlie_algebra** out);

/* Transport through the seeded Cayley isometry of the form. */
QLIE_API qlie_status qlie_conjugate(const qlie_algebra* a, uint64_t seed, qlie_algebra** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QLIE_H */
