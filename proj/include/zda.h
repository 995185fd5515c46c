/* zda — exact analysis of zero divisors in finite-dimensional associative
 * algebras given by structure constants.
 *
 * C interface to the shared library: opaque handles, integer status codes,
 * and heap-allocated strings released with zda_string_free. All functions
 * are safe to call from multiple threads on distinct handles.
 */

#ifndef ZDA_H
#define ZDA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ZDA_API __declspec(dllexport)
#else
#define ZDA_API __attribute__((visibility("default")))
#endif

typedef struct zda_algebra zda_algebra;
typedef struct zda_report zda_report;

typedef enum zda_status {
  ZDA_OK = 0,
  ZDA_ERR_PARSE = 1,        /* bad input text or file */
  ZDA_ERR_PRECONDITION = 2, /* not associative, dimension too large, ... */
  ZDA_ERR_INVALID = 3,      /* bad arguments (null handle, unknown name) */
  ZDA_ERR_INTERNAL = 4,
} zda_status;

ZDA_API const char* zda_version(void);

/* Releases strings returned by this library. */
ZDA_API void zda_string_free(char* s);

/* --- building algebras --------------------------------------------------- */

/* Parses the algebra-definition text format. On failure returns a nonzero
 * status and, when err_msg is non-null, stores a diagnostic. */
ZDA_API zda_status zda_algebra_from_text(const char* text, zda_algebra** out, char** err_msg);
ZDA_API zda_status zda_algebra_from_file(const char* path, zda_algebra** out, char** err_msg);
ZDA_API zda_status zda_algebra_from_catalog(const char* name, zda_algebra** out, char** err_msg);
ZDA_API void zda_algebra_free(zda_algebra* a);

/* Newline-separated catalog names. */
ZDA_API char* zda_catalog_names(void);

ZDA_API size_t zda_algebra_dim(const zda_algebra* a);
ZDA_API char* zda_algebra_name(const zda_algebra* a);
/* Canonical definition-file text for the algebra. */
ZDA_API char* zda_algebra_text(const zda_algebra* a);

/* --- analysis ------------------------------------------------------------ */

/* Runs the full tameness analysis. */
ZDA_API zda_status zda_analyze(const zda_algebra* a, zda_report** out, char** err_msg);
ZDA_API void zda_report_free(zda_report* r);

/* "tame", "not tame" or "undetermined". Owned by the report. */
ZDA_API const char* zda_report_verdict(const zda_report* r);
/* "yes", "no" or "undetermined": does the determinant form split into linear
 * forms over the algebraic closure. */
ZDA_API const char* zda_report_splits(const zda_report* r);
/* 1 when the zero-divisor set differs from the whole algebra. */
ZDA_API int zda_report_proper(const zda_report* r);
/* Number of subspace components (0 unless the set is a subspace union). */
ZDA_API size_t zda_report_component_count(const zda_report* r);
/* Dimension of component i, or (size_t)-1 when out of range. */
ZDA_API size_t zda_report_component_dim(const zda_report* r, size_t i);
/* Rendered report; machine_format selects the key-value format. */
ZDA_API char* zda_report_render(const zda_report* r, int machine_format);

/* --- command line -------------------------------------------------------- */

/* The full CLI: returns the process exit code and captures the streams.
 * argv excludes the program name. */
ZDA_API int zda_run_cli(int argc, const char* const* argv, char** out_text, char** err_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZDA_H */
